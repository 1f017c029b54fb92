#include "syt/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace syt {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(mpz_class c) {
    return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::monomial(mpz_class c, std::size_t power) {
    std::vector<mpz_class> coeffs(power + 1, mpz_class(0));
    coeffs[power] = std::move(c);
    return IntPolynomial(std::move(coeffs));
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
    if (i >= coeffs_.size())
        return 0;
    return coeffs_[i];
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                               mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out[i] += b.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                               mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return IntPolynomial{};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                               mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(const mpz_class& c) const {
    // Horner in (x + c): result = (...(a_n (x+c) + a_{n-1})(x+c) + ...)
    IntPolynomial base({c, 1});
    IntPolynomial result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * base + IntPolynomial::constant(*it);
    return result;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            out << (coeffs_[i] < 0 ? " - " : " + ");
        else if (coeffs_[i] < 0)
            out << "-";
        first = false;
        mpz_class mag = abs(coeffs_[i]);
        if (i == 0)
            out << mag.get_str();
        else {
            if (mag != 1)
                out << mag.get_str() << "*";
            out << "x";
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial r_poly(unsigned k) {
    // Recurrence from the expanded denominator 1 - xy + xy^2 - y^3:
    // r_k = x r_{k-1} - x r_{k-2} + r_{k-3}, r_0 = 0, r_1 = 1.
    // Cross-validated against direct series division in expand_S.
    IntPolynomial x = IntPolynomial::monomial(1, 1);
    std::vector<IntPolynomial> r;
    r.reserve(k + 1);
    r.push_back(IntPolynomial{});              // r_0
    if (k >= 1)
        r.push_back(IntPolynomial::constant(1)); // r_1
    for (unsigned i = 2; i <= k; ++i) {
        IntPolynomial next = x * r[i - 1] - x * r[i - 2];
        if (i >= 3)
            next = next + r[i - 3];
        r.push_back(std::move(next));
    }
    return r[k];
}

IntPolynomial r_jk_poly(unsigned j, unsigned k) {
    if (j < 1 || k < 1)
        throw std::invalid_argument("r_jk_poly requires j, k >= 1");
    return r_poly(j) * r_poly(k) - r_poly(j - 1) * r_poly(k - 1);
}

IntPolynomial q_poly(unsigned n) {
    IntPolynomial x = IntPolynomial::monomial(1, 1);
    IntPolynomial prev = IntPolynomial::constant(1);
    if (n == 0)
        return prev;
    IntPolynomial cur = x;
    for (unsigned i = 2; i <= n; ++i) {
        IntPolynomial next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool verify_chebyshev_sum(unsigned n) {
    IntPolynomial sum;
    for (unsigned i = 0; i < n; ++i)
        sum = sum + q_poly(i);
    return r_poly(n).shifted(1) == sum;
}

bool verify_chebyshev_factorization(unsigned m) {
    IntPolynomial qm1 = q_poly(m - 1);
    IntPolynomial qm = q_poly(m);
    IntPolynomial common = qm1 + qm;
    return r_poly(2 * m).shifted(1) == qm1 * common &&
           r_poly(2 * m + 1).shifted(1) == qm * common;
}

} // namespace syt
