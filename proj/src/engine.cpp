#include "syt/engine.hpp"

#include <mutex>

#include "syt/series.hpp"

namespace syt {

namespace {

mpz_class factorial(unsigned long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class motzkin_closed_form(unsigned long n) {
    mpz_class total = 0;
    mpz_class n_fact = factorial(n);
    for (unsigned long k = 0; 2 * k <= n; ++k)
        total += n_fact / (factorial(k) * factorial(k + 1) * factorial(n - 2 * k));
    return total;
}

} // namespace

mpz_class motzkin(long n) {
    if (n < 0)
        return 0;
    static std::vector<mpz_class> table;
    static std::mutex table_mutex;
    std::lock_guard<std::mutex> lock(table_mutex);
    while (table.size() <= static_cast<std::size_t>(n)) {
        unsigned long m = table.size();
        mpz_class value = motzkin_closed_form(m);
        if (m >= 2) {
            // (m+2) M_m = (2m+1) M_{m-1} + 3(m-1) M_{m-2}
            mpz_class rec = (2 * mpz_class(m) + 1) * table[m - 1] +
                            3 * (mpz_class(m) - 1) * table[m - 2];
            if (value * (mpz_class(m) + 2) != rec)
                throw InternalIdentityViolation(
                    "Motzkin closed form disagrees with recurrence at n=" +
                    std::to_string(m));
        }
        table.push_back(std::move(value));
    }
    return table[static_cast<std::size_t>(n)];
}

mpz_class catalan(unsigned long n) {
    return binomial(2 * n, n) / (mpz_class(n) + 1);
}

std::pair<Partition, int> reduce_mu(const Partition& mu) {
    if (mu.length() > 3)
        throw TooManyRows("mu has more than three rows");
    if (mu.length() < 3)
        return {mu, 0};
    int shift = mu.part(3);
    return {Partition::make({mu.part(1) - shift, mu.part(2) - shift}), shift};
}

mpz_class count_three_row(long n, const Partition& mu) {
    auto [reduced, shift] = reduce_mu(mu);
    long nn = n - 3 * static_cast<long>(shift);
    long m1 = reduced.part(1);
    long m2 = reduced.part(2);
    if (nn < m1 + m2)
        return 0; // no lambda of this size contains mu
    unsigned j = static_cast<unsigned>(m2) + 1;
    unsigned k = static_cast<unsigned>(m1 - m2) + 1;
    IntPolynomial r = r_jk_poly(j, k);
    mpz_class total = 0;
    for (long i = 0; i <= r.degree(); ++i)
        total += r.coeff(i) * motzkin(i + nn - (m1 + m2));
    return total;
}

mpz_class regev_difference(long n) {
    mpz_class diff = motzkin(n - 1) - motzkin(n - 3);
    if (n >= 3 && diff != count_three_row(n, Partition::make({2, 1})))
        throw InternalIdentityViolation(
            "Motzkin difference disagrees with the (2,1) count at n=" +
            std::to_string(n));
    return diff;
}

std::vector<std::vector<mpz_class>> coefficient_table(unsigned k_max) {
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        IntPolynomial r = r_poly(k);
        std::vector<mpz_class> row;
        long width = k == 0 ? 1 : static_cast<long>(k);
        for (long i = 0; i < width; ++i)
            row.push_back(r.coeff(i));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace syt
