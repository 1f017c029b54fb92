#include <doctest.h>

#include <random>

#include "syt/engine.hpp"
#include "syt/series.hpp"

using namespace syt;

namespace {

// Ballot-path count of Catalan numbers, independent of the radical form.
long catalan_brute(int n) {
    // paths on nonnegative heights with n up and n down steps
    std::vector<long> cur{1}; // cur[h] = number of prefixes ending at height h
    for (int step = 0; step < 2 * n; ++step) {
        std::vector<long> next(cur.size() + 1, 0);
        for (std::size_t h = 0; h < cur.size(); ++h) {
            if (cur[h] == 0)
                continue;
            next[h + 1] += cur[h];
            if (h > 0)
                next[h - 1] += cur[h];
        }
        cur = std::move(next);
    }
    return cur[0];
}

TruncatedSeries geometric(std::size_t order) {
    return TruncatedSeries::from_ints({1, -1}, order).inverted();
}

} // namespace

TEST_CASE("series arithmetic basics") {
    std::size_t n = 5;
    auto one_plus = TruncatedSeries::from_ints({1, 1}, n);
    auto one_minus = TruncatedSeries::from_ints({1, -1}, n);
    CHECK(one_plus * one_minus == TruncatedSeries::from_ints({1, 0, -1}, n));
    CHECK(one_plus * TruncatedSeries::one(n) == one_plus);
    CHECK(geometric(8) * TruncatedSeries::from_ints({1, -1}, 8) ==
          TruncatedSeries::one(8));
}

TEST_CASE("inversion") {
    TruncatedSeries g = geometric(10);
    for (std::size_t i = 0; i <= 10; ++i)
        CHECK(g.coeff(i) == 1);
    auto a = TruncatedSeries::from_ints({1, -2, -3}, 12);
    CHECK(a * a.inverted() == TruncatedSeries::one(12));
    CHECK_THROWS_AS(TruncatedSeries::from_ints({0, 1, 1}, 4).inverted(),
                    NonUnitConstantTerm);
}

TEST_CASE("square root") {
    CHECK(TruncatedSeries::one(6).sqrt() == TruncatedSeries::one(6));
    auto p = TruncatedSeries::from_ints({1, 1}, 9);
    CHECK((p * p).sqrt() == p);
    CHECK_THROWS_AS(TruncatedSeries::from_ints({2, 1}, 3).sqrt(),
                    ConstantTermNotOne);

    // 1/sqrt(1-4x) = sum binom(2n,n) x^n
    auto central = TruncatedSeries::from_ints({1, -4}, 6).sqrt().inverted();
    std::vector<long> expected{1, 2, 6, 20, 70, 252, 924};
    for (std::size_t i = 0; i <= 6; ++i)
        CHECK(central.coeff(i) == expected[i]);
}

TEST_CASE("composition") {
    auto f = TruncatedSeries::from_ints({3, 1, 4, 1, 5}, 10);
    auto x = TruncatedSeries::from_ints({0, 1}, 10);
    CHECK(f.composed_with(x) == f);
    CHECK_THROWS_AS(f.composed_with(TruncatedSeries::one(10)),
                    NonzeroInnerConstant);

    // (1/(1-x)) o (x/(1-x)) = (1-x)/(1-2x): 1, 1, 2, 4, 8, ...
    auto inner = geometric(10).shifted_up(1);
    auto composed = geometric(10).composed_with(inner);
    CHECK(composed.coeff(0) == 1);
    for (std::size_t i = 1; i <= 10; ++i)
        CHECK(composed.coeff(i) == mpq_class(mpz_class(1) << (i - 1)));

    // c(x^2): Catalan numbers at even powers
    auto c2 = catalan_series(8).composed_with(x.truncated(8) * x.truncated(8));
    std::vector<long> expected{1, 0, 1, 0, 2, 0, 5, 0, 14};
    for (std::size_t i = 0; i <= 8; ++i)
        CHECK(c2.coeff(i) == expected[i]);
}

TEST_CASE("catalan_series against ballot-path oracle") {
    auto c = catalan_series(8);
    for (int n = 0; n <= 8; ++n)
        CHECK(c.coeff(n) == catalan_brute(n));
}

TEST_CASE("motzkin_series against closed-form sum") {
    auto m = motzkin_series(12);
    for (long n = 0; n <= 12; ++n)
        CHECK(m.coeff(n) == mpq_class(motzkin(n)));
    CHECK(motzkin_series(0).coeff(0) == 1);
}

TEST_CASE("functional equations") {
    std::size_t n = 25;
    auto c = catalan_series(n);
    CHECK(c == TruncatedSeries::one(n) + (c * c).shifted_up(1));
    auto m = motzkin_series(n);
    // m = 1 + x m + x^2 m^2 (quadratic form)
    CHECK(m == TruncatedSeries::one(n) + m.shifted_up(1) +
                   (m * m).shifted_up(2));
}

TEST_CASE("central binomial series") {
    auto s0 = central_binomial_series(0, 4);
    std::vector<long> e0{1, 2, 6, 20, 70};
    for (std::size_t i = 0; i <= 4; ++i)
        CHECK(s0.coeff(i) == e0[i]);
    auto s1 = central_binomial_series(1, 3);
    std::vector<long> e1{1, 3, 10, 35};
    for (std::size_t i = 0; i <= 3; ++i)
        CHECK(s1.coeff(i) == e1[i]);
    for (unsigned s = 0; s <= 5; ++s)
        CHECK(verify_central_binomial(s, 30));
}

TEST_CASE("Catalan-Motzkin bridge") {
    CHECK(verify_catalan_motzkin_bridge(0));
    CHECK(verify_catalan_motzkin_bridge(10));
    CHECK(verify_catalan_motzkin_bridge(40));
}

TEST_CASE("binomial transform examples") {
    auto b1 = L_of_exp_times(TruncatedSeries::from_ints({1}, 8));
    for (std::size_t i = 0; i <= 8; ++i)
        CHECK(b1.coeff(i) == 1);
    auto b2 = L_of_exp_times(TruncatedSeries::from_ints({0, 1}, 8));
    for (std::size_t i = 0; i <= 8; ++i)
        CHECK(b2.coeff(i) == i);
}

TEST_CASE("binomial transform matches the composition route") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> dist(-9, 9);
    std::size_t order = 25;
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries a(order);
        for (std::size_t i = 0; i <= 12; ++i)
            a.set_coeff(i, dist(rng));
        TruncatedSeries transform = L_of_exp_times(a);
        // (1/(1-x)) F(x/(1-x)) with F the OGF of the same coefficients
        TruncatedSeries inv = geometric(order);
        TruncatedSeries rhs = a.composed_with(inv.shifted_up(1)) * inv;
        CHECK(transform == rhs);
    }
}

TEST_CASE("psi routes agree") {
    auto a0 = psi_h_g(0, 6);
    std::vector<long> trinomial{1, 1, 3, 7, 19, 51, 141};
    for (std::size_t i = 0; i <= 6; ++i)
        CHECK(a0.coeff(i) == trinomial[i]);
    CHECK(psi_h_g(1, 8).coeff(1) == 1);
    CHECK_NOTHROW(psi_h_g(5, 30));

    CHECK(psi_h_f(1, 20) == psi_h_g(0, 20) + psi_h_g(1, 20));
    CHECK_NOTHROW(psi_h_f(2, 20));
    CHECK_NOTHROW(psi_h_f(6, 30));

    CHECK(psi_G3_one_row(1, 25) == motzkin_series(25));
    auto g2 = psi_G3_one_row(2, 25);
    auto m = motzkin_series(26);
    for (std::size_t i = 0; i <= 25; ++i)
        CHECK(g2.coeff(i) == m.coeff(i + 1)); // (m(x)-1)/x
    CHECK_NOTHROW(psi_G3_one_row(4, 30));
}

TEST_CASE("counting series are integral") {
    CHECK(catalan_series(40).all_integral());
    CHECK(motzkin_series(40).all_integral());
    for (unsigned k = 0; k <= 6; ++k)
        CHECK(psi_h_g(k, 30).all_integral());
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(psi_h_f(k, 30).all_integral());
}

TEST_CASE("expand_S matches r_poly") {
    BiSeries s = expand_S(12, 12);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(2) == IntPolynomial({0, 1}));
    for (unsigned k = 0; k <= 12; ++k)
        CHECK(s.coeff(k) == r_poly(k));
}

TEST_CASE("expand_T_slice matches r_jk_poly") {
    auto t = expand_T_slice(8, 8);
    CHECK(t[0][0] == IntPolynomial::constant(1));
    CHECK(t[1][1] == IntPolynomial({-1, 0, 1}));
}

TEST_CASE("two-row kernel identity") {
    CHECK(verify_B_and_two_row_kernel(2, 1, 15));
    CHECK(verify_B_and_two_row_kernel(6, 6, 15));
}

TEST_CASE("parity decomposition") {
    CHECK(verify_parity_decomposition(25, 20));
    // the y^n coefficients of P_e + P_o reassemble r_n(x+1)
    CHECK(r_poly(1).shifted(1) == q_poly(0) * q_poly(0));
    for (unsigned n = 2; n <= 20; ++n)
        CHECK(r_poly(n).shifted(1) ==
              q_poly((n - 1) / 2) * q_poly((n - 1) / 2) +
                  q_poly(n / 2) * q_poly(n / 2 - 1));
}

TEST_CASE("coefficient-extraction bridge to the engine") {
    for (unsigned k = 1; k <= 6; ++k) {
        auto g = psi_G3_one_row(k, 30);
        for (long n = static_cast<long>(k) - 1; n <= 25; ++n) {
            long power = n - static_cast<long>(k) + 1;
            if (power < 0)
                continue;
            Partition mu = k >= 2 ? Partition::make({static_cast<int>(k) - 1})
                                  : Partition{};
            CHECK(g.coeff(power) == mpq_class(count_three_row(n, mu)));
        }
    }
}
