#ifndef SYT_ORACLE_HPP
#define SYT_ORACLE_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "syt/partition.hpp"

namespace syt {

struct TooManyCells : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Brute-force SYT count by memoized largest-entry corner removal.
// Deliberately shares nothing with the engine beyond the partition types.
mpz_class count_syt(const SkewShape& shape);

// (row, col) -> entry, 1-indexed.
using Filling = std::map<std::pair<int, int>, int>;

// Every standard filling, by backtracking; guarded against explosion.
std::vector<Filling> enumerate_syt(const SkewShape& shape,
                                   int max_cells = 12);

// Sum of count_syt(lambda/mu) over all lambda of n with at most max_rows
// rows containing mu.
mpz_class oracle_total(int n, const Partition& mu, int max_rows = 3);

} // namespace syt

#endif
