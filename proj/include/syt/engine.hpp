#ifndef SYT_ENGINE_HPP
#define SYT_ENGINE_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "syt/partition.hpp"
#include "syt/polynomial.hpp"

namespace syt {

struct TooManyRows : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// M_n by the closed-form factorial sum, cross-checked against the
// three-term recurrence. Negative indices evaluate to 0.
mpz_class motzkin(long n);

mpz_class catalan(unsigned long n);

// Strip the first mu_3 columns from a three-row mu; the count for (n, mu)
// equals the count for (n - 3 mu_3, reduced mu).
std::pair<Partition, int> reduce_mu(const Partition& mu);

// Number of standard Young tableaux of skew shape lambda/mu summed over
// all lambda of n with at most three rows containing mu.
mpz_class count_three_row(long n, const Partition& mu);

// M_{n-1} - M_{n-3}; asserted against count_three_row(n, (2,1)) for n >= 3.
mpz_class regev_difference(long n);

// Rows k = 0..k_max of the r_k coefficient table.
std::vector<std::vector<mpz_class>> coefficient_table(unsigned k_max);

} // namespace syt

#endif
