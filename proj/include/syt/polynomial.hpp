#ifndef SYT_POLYNOMIAL_HPP
#define SYT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace syt {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Canonical form: no stored leading zeros; the zero
/// polynomial stores nothing and has degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial constant(mpz_class c);
    static IntPolynomial monomial(mpz_class c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    mpz_class coeff(std::size_t i) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    bool operator==(const IntPolynomial&) const = default;

    /// p(x + c), exact, by iterated multiplication of the shifted base.
    IntPolynomial shifted(const mpz_class& c) const;

    mpz_class eval(const mpz_class& x) const;

    /// Ascending-power form "c0 + c1*x + c2*x^2", zero terms omitted.
    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// r_k(x): degree k-1 coefficient polynomial of the one-row count,
// generated by y / ((1-y)(1+(1-x)y+y^2)).
IntPolynomial r_poly(unsigned k);

// r_{j,k}(x) = r_j r_k - r_{j-1} r_{k-1}, with r_0 = 0.
IntPolynomial r_jk_poly(unsigned j, unsigned k);

// q_n(x) = U_n(x/2): q_0 = 1, q_1 = x, q_n = x q_{n-1} - q_{n-2}.
IntPolynomial q_poly(unsigned n);

// r_n(x+1) == q_0 + q_1 + ... + q_{n-1}
bool verify_chebyshev_sum(unsigned n);

// r_{2m}(x+1) == q_{m-1}(q_{m-1}+q_m) and r_{2m+1}(x+1) == q_m(q_{m-1}+q_m)
bool verify_chebyshev_factorization(unsigned m);

} // namespace syt

#endif
