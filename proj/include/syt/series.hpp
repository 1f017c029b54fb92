#ifndef SYT_SERIES_HPP
#define SYT_SERIES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "syt/polynomial.hpp"

namespace syt {

struct NonUnitConstantTerm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConstantTermNotOne : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonzeroInnerConstant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// Two independent computation routes for the same series disagreed;
// signals an implementation bug, never bad user input.
struct InternalIdentityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Truncated formal power series over exact rationals. Coefficients are
/// valid for powers 0..order() inclusive; binary operations truncate to
/// the smaller order and never extend precision.
class TruncatedSeries {
public:
    // Zero series of the given order.
    explicit TruncatedSeries(std::size_t order)
        : coeffs_(order + 1, mpq_class(0)) {}
    explicit TruncatedSeries(std::vector<mpq_class> coeffs);

    static TruncatedSeries one(std::size_t order);
    // Series with the given low-order coefficients, zero-padded to order.
    static TruncatedSeries from_ints(std::vector<long> low, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }
    const mpq_class& coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, mpq_class v) { coeffs_.at(i) = std::move(v); }

    TruncatedSeries truncated(std::size_t order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries scaled(const mpq_class& c) const;
    bool operator==(const TruncatedSeries&) const = default;

    TruncatedSeries inverted() const;   // throws NonUnitConstantTerm
    TruncatedSeries sqrt() const;       // throws ConstantTermNotOne
    // f(g(x)); throws NonzeroInnerConstant unless g(0) = 0.
    TruncatedSeries composed_with(const TruncatedSeries& g) const;
    TruncatedSeries pow(unsigned e) const;

    // Multiply by x^k, truncating the top k coefficients.
    TruncatedSeries shifted_up(std::size_t k) const;
    // Divide by x^k; the k low coefficients must be exactly zero.
    TruncatedSeries shifted_down(std::size_t k) const;

    bool all_integral() const;
    std::string to_string() const;

private:
    std::vector<mpq_class> coeffs_;
};

mpz_class binomial(unsigned long n, unsigned long k);

TruncatedSeries catalan_series(std::size_t order);
TruncatedSeries motzkin_series(std::size_t order);

// Coefficient n is binomial(2n+s, n), by direct computation.
TruncatedSeries central_binomial_series(unsigned s, std::size_t order);
// Checks central_binomial_series(s) == c(x)^s / sqrt(1-4x).
bool verify_central_binomial(unsigned s, std::size_t order);

// (1/(1-x)) c(x^2/(1-x)^2) == m(x)
bool verify_catalan_motzkin_bridge(std::size_t order);

// Binomial transform b_n = sum_k binomial(n,k) a_k: the OGF of L(e^x f)
// where the input stores the EGF coefficients a_n of f.
TruncatedSeries L_of_exp_times(const TruncatedSeries& f_egf);

// alpha_k: definitional route (binomial transform of the EGF coefficients
// of theta(g_k)) cross-checked against x^k m(x)^k / sqrt(1-2x-3x^2).
TruncatedSeries psi_h_g(unsigned k, std::size_t order);

// beta_k: alpha_0 + 2(alpha_1+...+alpha_{k-1}) + alpha_k cross-checked
// against m/(1-xm)^2 (1 - x^k m^k).
TruncatedSeries psi_h_f(unsigned k, std::size_t order);

// alpha_0 + alpha_1 - alpha_k - alpha_{k+1} cross-checked against
// m/(1-xm) (1 - x^k m^k).
TruncatedSeries psi_G3_one_row(unsigned k, std::size_t order);

/// Truncated series in an outer variable y whose coefficients are integer
/// polynomials in x.
class BiSeries {
public:
    explicit BiSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit BiSeries(std::vector<IntPolynomial> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const IntPolynomial& coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, IntPolynomial p) { coeffs_.at(i) = std::move(p); }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    bool operator==(const BiSeries&) const = default;

    // Inverse over the polynomial coefficient ring; the y^0 coefficient
    // must be the constant polynomial 1.
    BiSeries inverted() const;

private:
    std::vector<IntPolynomial> coeffs_;
};

// Expansion of y/((1-y)(1+(1-x)y+y^2)) = sum r_k(x) y^k by generic series
// division over the polynomial ring (independent of the r_poly recurrence).
// Degrees are checked against x_deg_bound.
BiSeries expand_S(long x_deg_bound, std::size_t y_order);

// Coefficients of y^j z^k in (1-yz) S(x,y) S(x,z) for 1 <= j,k; each entry
// is asserted equal to r_jk_poly(j,k). Indexed [j-1][k-1].
std::vector<std::vector<IntPolynomial>> expand_T_slice(std::size_t j_order,
                                                       std::size_t k_order);

// Coefficient of y^j z^k in (z/(1-z))B(y) + (y/(1-y))B(z)
// - sum_n beta_n (y^n z - y z^n)/(y - z), with the kernel expanded as the
// homogeneous sum sum_{a+b=n-2} y^{a+1} z^{b+1}, equals
// beta_j + beta_k - beta_{j+k} for all j <= y_order, k <= z_order.
bool verify_B_and_two_row_kernel(std::size_t y_order, std::size_t z_order,
                                 std::size_t x_order);

// Parity split of y/((1-y)(1-xy+y^2)) into P_e + P_o and the Chebyshev
// product forms of their y-coefficients.
bool verify_parity_decomposition(long x_deg, std::size_t y_order);

} // namespace syt

#endif
