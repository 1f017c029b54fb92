#include "syt/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace syt {

TruncatedSeries::TruncatedSeries(std::vector<mpq_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_ints(std::vector<long> low,
                                           std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i < low.size() && i <= order; ++i)
        s.coeffs_[i] = low[i];
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order())
        throw std::invalid_argument("cannot extend a truncated series");
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order; ++i)
        s.coeffs_[i] = coeffs_[i];
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j + i <= n; ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const mpq_class& c) const {
    TruncatedSeries out(order());
    for (std::size_t i = 0; i <= order(); ++i)
        out.coeffs_[i] = coeffs_[i] * c;
    return out;
}

TruncatedSeries TruncatedSeries::inverted() const {
    if (coeffs_[0] == 0)
        throw NonUnitConstantTerm("series has zero constant term");
    TruncatedSeries out(order());
    out.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t n = 1; n <= order(); ++n) {
        mpq_class acc = 0;
        for (std::size_t i = 1; i <= n; ++i)
            acc += coeffs_[i] * out.coeffs_[n - i];
        out.coeffs_[n] = -acc / coeffs_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::sqrt() const {
    if (coeffs_[0] != 1)
        throw ConstantTermNotOne("series sqrt requires constant term 1");
    TruncatedSeries out(order());
    out.coeffs_[0] = 1;
    for (std::size_t n = 1; n <= order(); ++n) {
        mpq_class acc = coeffs_[n];
        for (std::size_t i = 1; i < n; ++i)
            acc -= out.coeffs_[i] * out.coeffs_[n - i];
        out.coeffs_[n] = acc / 2;
    }
    return out;
}

TruncatedSeries TruncatedSeries::composed_with(const TruncatedSeries& g) const {
    if (g.coeffs_[0] != 0)
        throw NonzeroInnerConstant("composition needs g(0) = 0");
    std::size_t n = std::min(order(), g.order());
    TruncatedSeries gt = g.truncated(n);
    TruncatedSeries out(n);
    for (std::size_t idx = 0; idx <= order(); ++idx) {
        std::size_t i = order() - idx;
        out = out * gt;
        out.coeffs_[0] += coeffs_[i];
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries out = TruncatedSeries::one(order());
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t k) const {
    TruncatedSeries out(order());
    for (std::size_t i = 0; i + k <= order(); ++i)
        out.coeffs_[i + k] = coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::shifted_down(std::size_t k) const {
    if (k > order())
        throw std::invalid_argument("shift exceeds order");
    for (std::size_t i = 0; i < k; ++i)
        if (coeffs_[i] != 0)
            throw InternalIdentityViolation(
                "expected vanishing low-order coefficient before down-shift");
    TruncatedSeries out(order() - k);
    for (std::size_t i = k; i <= order(); ++i)
        out.coeffs_[i - k] = coeffs_[i];
    return out;
}

bool TruncatedSeries::all_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& q) { return q.get_den() == 1; });
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i <= order(); ++i) {
        if (i > 0)
            out << ", ";
        out << coeffs_[i].get_str();
    }
    return out.str();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

TruncatedSeries catalan_series(std::size_t order) {
    // (1 - sqrt(1-4x)) / (2x), with the removable x factor cancelled
    // after checking it actually vanishes.
    TruncatedSeries radicand = TruncatedSeries::from_ints({1, -4}, order + 1);
    TruncatedSeries num = TruncatedSeries::one(order + 1) - radicand.sqrt();
    return num.shifted_down(1).scaled(mpq_class(1, 2));
}

TruncatedSeries motzkin_series(std::size_t order) {
    // (1 - x - sqrt(1-2x-3x^2)) / (2x^2)
    TruncatedSeries radicand =
        TruncatedSeries::from_ints({1, -2, -3}, order + 2);
    TruncatedSeries num = TruncatedSeries::from_ints({1, -1}, order + 2) -
                          radicand.sqrt();
    return num.shifted_down(2).scaled(mpq_class(1, 2));
}

TruncatedSeries central_binomial_series(unsigned s, std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t n = 0; n <= order; ++n)
        out.set_coeff(n, mpq_class(binomial(2 * n + s, n)));
    return out;
}

bool verify_central_binomial(unsigned s, std::size_t order) {
    TruncatedSeries radicand = TruncatedSeries::from_ints({1, -4}, order);
    TruncatedSeries rhs =
        catalan_series(order).pow(s) * radicand.sqrt().inverted();
    return central_binomial_series(s, order) == rhs;
}

bool verify_catalan_motzkin_bridge(std::size_t order) {
    TruncatedSeries inv1 =
        TruncatedSeries::from_ints({1, -1}, order).inverted();
    TruncatedSeries inner = (inv1 * inv1).shifted_up(2); // x^2/(1-x)^2
    TruncatedSeries lhs = catalan_series(order).composed_with(inner) * inv1;
    return lhs == motzkin_series(order);
}

TruncatedSeries L_of_exp_times(const TruncatedSeries& f_egf) {
    std::size_t n = f_egf.order();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        mpq_class acc = 0;
        for (std::size_t k = 0; k <= i; ++k)
            acc += mpq_class(binomial(i, k)) * f_egf.coeff(k);
        out.set_coeff(i, acc);
    }
    return out;
}

namespace {

// sqrt(1-2x-3x^2)^{-1}, the central trinomial generating function.
TruncatedSeries inv_motzkin_radical(std::size_t order) {
    return TruncatedSeries::from_ints({1, -2, -3}, order).sqrt().inverted();
}

// x m(x), the workhorse factor of the closed forms.
TruncatedSeries x_motzkin(std::size_t order) {
    return motzkin_series(order).shifted_up(1);
}

} // namespace

TruncatedSeries psi_h_g(unsigned k, std::size_t order) {
    // Route (a): theta(g_k) has EGF coefficient binomial(2n+k, n) at
    // power 2n+k; multiplying by e^x is the binomial transform.
    TruncatedSeries egf(order);
    for (std::size_t n = 0; 2 * n + k <= order; ++n)
        egf.set_coeff(2 * n + k, mpq_class(binomial(2 * n + k, n)));
    TruncatedSeries definitional = L_of_exp_times(egf);

    // Route (b): x^k m(x)^k / sqrt(1-2x-3x^2).
    TruncatedSeries closed = x_motzkin(order).pow(k) * inv_motzkin_radical(order);

    if (definitional != closed)
        throw InternalIdentityViolation("psi_h_g routes disagree at k=" +
                                        std::to_string(k));
    return closed;
}

TruncatedSeries psi_h_f(unsigned k, std::size_t order) {
    if (k < 1)
        throw std::invalid_argument("psi_h_f requires k >= 1");
    TruncatedSeries definitional = psi_h_g(0, order);
    for (unsigned i = 1; i < k; ++i)
        definitional = definitional + psi_h_g(i, order).scaled(2);
    definitional = definitional + psi_h_g(k, order);

    TruncatedSeries xm = x_motzkin(order);
    TruncatedSeries inv = (TruncatedSeries::one(order) - xm).inverted();
    TruncatedSeries closed = motzkin_series(order) * inv * inv *
                             (TruncatedSeries::one(order) - xm.pow(k));

    if (definitional != closed)
        throw InternalIdentityViolation("psi_h_f routes disagree at k=" +
                                        std::to_string(k));
    return closed;
}

TruncatedSeries psi_G3_one_row(unsigned k, std::size_t order) {
    if (k < 1)
        throw std::invalid_argument("psi_G3_one_row requires k >= 1");
    TruncatedSeries definitional = psi_h_g(0, order) + psi_h_g(1, order) -
                                   psi_h_g(k, order) - psi_h_g(k + 1, order);

    TruncatedSeries xm = x_motzkin(order);
    TruncatedSeries closed = motzkin_series(order) *
                             (TruncatedSeries::one(order) - xm).inverted() *
                             (TruncatedSeries::one(order) - xm.pow(k));

    if (definitional != closed)
        throw InternalIdentityViolation("psi_G3_one_row routes disagree at k=" +
                                        std::to_string(k));
    return closed;
}

BiSeries::BiSeries(std::vector<IntPolynomial> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("biseries needs at least the constant term");
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    BiSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    BiSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    BiSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j + i <= n; ++j)
            out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return out;
}

BiSeries BiSeries::inverted() const {
    if (coeffs_[0] != IntPolynomial::constant(1))
        throw NonUnitConstantTerm("biseries inversion requires constant term 1");
    BiSeries out(order());
    out.coeffs_[0] = IntPolynomial::constant(1);
    for (std::size_t n = 1; n <= order(); ++n) {
        IntPolynomial acc;
        for (std::size_t i = 1; i <= n; ++i)
            acc = acc + coeffs_[i] * out.coeffs_[n - i];
        out.coeffs_[n] = IntPolynomial{} - acc;
    }
    return out;
}

namespace {

// Denominator factor 1 + (1-x) y + y^2 as a BiSeries in y.
BiSeries kernel_factor(std::size_t order) {
    BiSeries d(order);
    d.set_coeff(0, IntPolynomial::constant(1));
    if (order >= 1)
        d.set_coeff(1, IntPolynomial({1, -1})); // 1 - x
    if (order >= 2)
        d.set_coeff(2, IntPolynomial::constant(1));
    return d;
}

BiSeries one_minus_y(std::size_t order) {
    BiSeries d(order);
    d.set_coeff(0, IntPolynomial::constant(1));
    if (order >= 1)
        d.set_coeff(1, IntPolynomial::constant(-1));
    return d;
}

BiSeries monomial_y(std::size_t order) {
    BiSeries num(order);
    if (order >= 1)
        num.set_coeff(1, IntPolynomial::constant(1));
    return num;
}

} // namespace

BiSeries expand_S(long x_deg_bound, std::size_t y_order) {
    BiSeries den = one_minus_y(y_order) * kernel_factor(y_order);
    BiSeries s = monomial_y(y_order) * den.inverted();
    for (std::size_t k = 0; k <= y_order; ++k)
        if (s.coeff(k).degree() > x_deg_bound)
            throw std::invalid_argument("expand_S exceeded x degree bound at y^" +
                                        std::to_string(k));
    return s;
}

std::vector<std::vector<IntPolynomial>> expand_T_slice(std::size_t j_order,
                                                       std::size_t k_order) {
    std::size_t top = std::max(j_order, k_order);
    BiSeries s = expand_S(static_cast<long>(top), top);
    std::vector<std::vector<IntPolynomial>> out(j_order);
    for (std::size_t j = 1; j <= j_order; ++j) {
        out[j - 1].resize(k_order);
        for (std::size_t k = 1; k <= k_order; ++k) {
            // [y^j z^k] (1 - yz) S(x,y) S(x,z)
            IntPolynomial t = s.coeff(j) * s.coeff(k) -
                              s.coeff(j - 1) * s.coeff(k - 1);
            if (t != r_jk_poly(j, k))
                throw InternalIdentityViolation(
                    "T slice mismatch at (j,k)=(" + std::to_string(j) + "," +
                    std::to_string(k) + ")");
            out[j - 1][k - 1] = std::move(t);
        }
    }
    return out;
}

bool verify_B_and_two_row_kernel(std::size_t y_order, std::size_t z_order,
                                 std::size_t x_order) {
    std::size_t top = y_order + z_order;
    std::vector<TruncatedSeries> beta;
    beta.emplace_back(x_order); // beta_0 unused, keeps indices aligned
    for (std::size_t n = 1; n <= top; ++n)
        beta.push_back(psi_h_f(n, x_order));

    // Kernel sum_n beta_n (y^n z - y z^n)/(y-z) via the divided-difference
    // expansion sum_{a+b=n-2} y^{a+1} z^{b+1}; no division by (y-z).
    std::vector<std::vector<TruncatedSeries>> kernel(
        y_order + 1, std::vector<TruncatedSeries>(z_order + 1,
                                                  TruncatedSeries(x_order)));
    for (std::size_t n = 2; n <= top; ++n)
        for (std::size_t a = 0; a + 2 <= n; ++a) {
            std::size_t j = a + 1, k = n - 2 - a + 1;
            if (j <= y_order && k <= z_order)
                kernel[j][k] = kernel[j][k] + beta[n];
        }

    for (std::size_t j = 1; j <= y_order; ++j)
        for (std::size_t k = 1; k <= z_order; ++k) {
            // [y^j z^k] of (z/(1-z))B(y) is beta_j, and symmetrically.
            TruncatedSeries lhs = beta[j] + beta[k] - kernel[j][k];
            TruncatedSeries rhs = beta[j] + beta[k] - beta[j + k];
            if (lhs != rhs)
                return false;
        }
    return true;
}

bool verify_parity_decomposition(long x_deg, std::size_t y_order) {
    // Denominator factors 1 - xy + y^2 and its sign-flipped partner.
    BiSeries d_minus(y_order), d_plus(y_order);
    d_minus.set_coeff(0, IntPolynomial::constant(1));
    d_plus.set_coeff(0, IntPolynomial::constant(1));
    if (y_order >= 1) {
        d_minus.set_coeff(1, IntPolynomial({0, -1})); // -x
        d_plus.set_coeff(1, IntPolynomial({0, 1}));   // +x
    }
    if (y_order >= 2) {
        d_minus.set_coeff(2, IntPolynomial::constant(1));
        d_plus.set_coeff(2, IntPolynomial::constant(1));
    }
    BiSeries inv_full =
        (one_minus_y(y_order) * d_minus * d_plus).inverted();

    BiSeries num_e(y_order); // y(1+y^2)
    if (y_order >= 1)
        num_e.set_coeff(1, IntPolynomial::constant(1));
    if (y_order >= 3)
        num_e.set_coeff(3, IntPolynomial::constant(1));
    BiSeries num_o(y_order); // x y^2
    if (y_order >= 2)
        num_o.set_coeff(2, IntPolynomial({0, 1}));

    BiSeries p_e = num_e * inv_full;
    BiSeries p_o = num_o * inv_full;

    BiSeries base =
        monomial_y(y_order) * (one_minus_y(y_order) * d_minus).inverted();
    if (p_e + p_o != base)
        return false;

    for (std::size_t n = 0; n <= y_order; ++n) {
        if (p_e.coeff(n).degree() > x_deg || p_o.coeff(n).degree() > x_deg)
            return false;
        IntPolynomial even_expected =
            n == 0 ? IntPolynomial{} : q_poly((n - 1) / 2) * q_poly((n - 1) / 2);
        if (p_e.coeff(n) != even_expected)
            return false;
        IntPolynomial odd_expected =
            n < 2 ? IntPolynomial{} : q_poly(n / 2) * q_poly(n / 2 - 1);
        if (p_o.coeff(n) != odd_expected)
            return false;
    }
    return true;
}

} // namespace syt
