#include <doctest.h>

#include "syt/polynomial.hpp"

using namespace syt;

namespace {

IntPolynomial poly(std::vector<long> coeffs) {
    std::vector<mpz_class> z(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(z));
}

// r_{k,i} for k = 0..8, reproduced from the coefficient table.
const std::vector<std::vector<long>> kRTable = {
    {0},
    {1},
    {0, 1},
    {0, -1, 1},
    {1, 0, -2, 1},
    {0, 2, 1, -3, 1},
    {0, -2, 3, 3, -4, 1},
    {1, 0, -6, 3, 6, -5, 1},
    {0, 3, 3, -12, 1, 10, -6, 1},
};

} // namespace

TEST_CASE("addition and cancellation") {
    CHECK(poly({-1, 0, 1}) + poly({1}) == poly({0, 0, 1}));
    CHECK(IntPolynomial{} + poly({3, 1}) == poly({3, 1}));
    CHECK(poly({0, 1}) + poly({0, 1}) == poly({0, 2}));
    CHECK((poly({1, 1}) - poly({1, 1})).is_zero());
}

TEST_CASE("multiplication") {
    CHECK(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
    CHECK((poly({5, 2}) * IntPolynomial{}).is_zero());
    CHECK(r_poly(2) * r_poly(2) == poly({0, 0, 1}));
}

TEST_CASE("shift") {
    CHECK(poly({0, 0, 1}).shifted(1) == poly({1, 2, 1}));
    CHECK(poly({3, -1, 7}).shifted(0) == poly({3, -1, 7}));
    // r_3(x) = x^2 - x, so r_3(x+1) = x^2 + x = q_1 (q_0 + q_1)
    CHECK(r_poly(3).shifted(1) == poly({0, 1, 1}));
    CHECK(r_poly(3).shifted(1) == q_poly(1) * (q_poly(0) + q_poly(1)));
}

TEST_CASE("r_poly reproduces the coefficient table") {
    for (unsigned k = 0; k < kRTable.size(); ++k) {
        IntPolynomial r = r_poly(k);
        for (std::size_t i = 0; i < 8; ++i) {
            long expected = i < kRTable[k].size() ? kRTable[k][i] : 0;
            CHECK(r.coeff(i) == expected);
        }
    }
}

TEST_CASE("r_poly degree and leading coefficient") {
    CHECK(r_poly(0).is_zero());
    for (unsigned k = 1; k <= 40; ++k) {
        IntPolynomial r = r_poly(k);
        CHECK(r.degree() == static_cast<long>(k) - 1);
        CHECK(r.coeff(k - 1) == 1);
    }
}

TEST_CASE("r_jk_poly") {
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(r_jk_poly(1, k) == r_poly(k));
    CHECK(r_jk_poly(2, 2) == poly({-1, 0, 1}));
    CHECK(r_jk_poly(2, 3) == poly({0, -1, -1, 1}));
    for (unsigned j = 1; j <= 8; ++j)
        for (unsigned k = j; k <= 8; ++k)
            CHECK(r_jk_poly(j, k) == r_jk_poly(k, j));
}

TEST_CASE("q_poly recurrence values") {
    CHECK(q_poly(0) == poly({1}));
    CHECK(q_poly(1) == poly({0, 1}));
    CHECK(q_poly(2) == poly({-1, 0, 1}));
    CHECK(q_poly(3) == poly({0, -2, 0, 1}));
    for (unsigned n = 0; n <= 40; ++n)
        CHECK(q_poly(n).eval(2) == n + 1); // U_n(1) = n + 1
}

TEST_CASE("Chebyshev sum identity") {
    CHECK(verify_chebyshev_sum(1));
    CHECK(verify_chebyshev_sum(4));
    CHECK(verify_chebyshev_sum(12));
    for (unsigned n = 1; n <= 30; ++n)
        CHECK(verify_chebyshev_sum(n));
}

TEST_CASE("Chebyshev factorization identity") {
    CHECK(verify_chebyshev_factorization(1));
    CHECK(r_poly(4).shifted(1) == q_poly(1) * (q_poly(1) + q_poly(2)));
    CHECK(verify_chebyshev_factorization(10));
    for (unsigned m = 1; m <= 15; ++m)
        CHECK(verify_chebyshev_factorization(m));
}

TEST_CASE("printing") {
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(poly({1, 0, -2, 1}).to_string() == "1 - 2*x^2 + x^3");
    CHECK(poly({0, 1}).to_string() == "x");
}
