#include <doctest.h>

#include "syt/engine.hpp"
#include "syt/oracle.hpp"

using namespace syt;

TEST_CASE("motzkin values") {
    CHECK(motzkin(0) == 1);
    CHECK(motzkin(1) == 1);
    CHECK(motzkin(4) == 9);
    CHECK(motzkin(10) == 2188);
    CHECK(motzkin(-2) == 0);
    // closed form vs recurrence is asserted internally for every entry
    CHECK_NOTHROW(motzkin(500));
    CHECK(motzkin(48) > mpz_class("18446744073709551615")); // past 64-bit
}

TEST_CASE("catalan values") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("reduce_mu") {
    auto [r1, s1] = reduce_mu(Partition::make({4, 2, 1}));
    CHECK(r1 == Partition::make({3, 1}));
    CHECK(s1 == 1);
    auto [r2, s2] = reduce_mu(Partition::make({2, 1}));
    CHECK(r2 == Partition::make({2, 1}));
    CHECK(s2 == 0);
    auto [r3, s3] = reduce_mu(Partition::make({1, 1, 1}));
    CHECK(r3 == Partition{});
    CHECK(s3 == 1);
    CHECK_THROWS_AS(reduce_mu(Partition::make({2, 1, 1, 1})), TooManyRows);
}

TEST_CASE("count_three_row base cases") {
    for (long n = 0; n <= 30; ++n)
        CHECK(count_three_row(n, Partition{}) == motzkin(n));
    for (long n = 1; n <= 30; ++n)
        CHECK(count_three_row(n, Partition::make({1})) == motzkin(n));
    CHECK(count_three_row(4, Partition::make({2, 1})) == 3);
    CHECK(count_three_row(5, Partition::make({2, 1})) == 7);
    CHECK(count_three_row(3, Partition::make({2, 1})) == 1);
    CHECK(count_three_row(2, Partition::make({2, 1})) == 0);
}

TEST_CASE("count_three_row matches the brute-force oracle") {
    for (int m1 = 0; m1 <= 5; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2) {
            Partition mu = Partition::make({m1, m2});
            for (int n = mu.size(); n <= 14; ++n)
                CHECK(count_three_row(n, mu) == oracle_total(n, mu));
        }
}

TEST_CASE("three-row mu reduction matches the oracle") {
    for (int m1 = 1; m1 <= 4; ++m1)
        for (int m2 = 1; m2 <= m1; ++m2)
            for (int m3 = 1; m3 <= m2; ++m3) {
                Partition mu = Partition::make({m1, m2, m3});
                for (int n = mu.size(); n <= 12; ++n)
                    CHECK(count_three_row(n, mu) == oracle_total(n, mu));
            }
}

TEST_CASE("monotonicity for the empty inner shape") {
    for (long n = 1; n <= 30; ++n)
        CHECK(count_three_row(n, Partition{}) >=
              count_three_row(n - 1, Partition{}));
}

TEST_CASE("regev_difference") {
    CHECK(regev_difference(4) == 3);
    CHECK(regev_difference(3) == 1);
    CHECK(regev_difference(12) == motzkin(11) - motzkin(9));
    for (long n = 3; n <= 30; ++n)
        CHECK_NOTHROW(regev_difference(n)); // internal cross-check
}

TEST_CASE("coefficient_table rows") {
    auto table = coefficient_table(8);
    CHECK(table[1] == std::vector<mpz_class>{1});
    CHECK(table[5] == std::vector<mpz_class>{0, 2, 1, -3, 1});
    CHECK(table[7] == std::vector<mpz_class>{1, 0, -6, 3, 6, -5, 1});
}
