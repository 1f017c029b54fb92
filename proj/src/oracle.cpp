#include "syt/oracle.hpp"

#include <string>
#include <utility>

namespace syt {

namespace {

mpz_class count_rec(const Partition& outer, const Partition& inner,
                    std::map<Partition, mpz_class>& cache) {
    if (outer == inner)
        return 1;
    auto hit = cache.find(outer);
    if (hit != cache.end())
        return hit->second;
    mpz_class total = 0;
    for (auto [row, col] : removable_corners(SkewShape(outer, inner))) {
        std::vector<int> parts = outer.parts();
        parts[row - 1] -= 1;
        total += count_rec(Partition::make(std::move(parts)), inner, cache);
    }
    cache.emplace(outer, total);
    return total;
}

} // namespace

mpz_class count_syt(const SkewShape& shape) {
    std::map<Partition, mpz_class> cache; // inner is fixed per query
    return count_rec(shape.outer(), shape.inner(), cache);
}

namespace {

void enumerate_rec(const Partition& outer, const Partition& inner,
                   std::vector<int>& row_fill, int next, int total,
                   Filling& current, std::vector<Filling>& out) {
    if (next > total) {
        out.push_back(current);
        return;
    }
    for (int row = 1; row <= outer.length(); ++row) {
        int col = row_fill[row - 1] + 1;
        if (col > outer.part(row))
            continue;
        // column-strict: the cell above must already be filled
        if (row > 1 && row_fill[row - 2] < col)
            continue;
        row_fill[row - 1] = col;
        current[{row, col}] = next;
        enumerate_rec(outer, inner, row_fill, next + 1, total, current, out);
        current.erase({row, col});
        row_fill[row - 1] = col - 1;
    }
}

} // namespace

std::vector<Filling> enumerate_syt(const SkewShape& shape, int max_cells) {
    if (shape.cell_count() > max_cells)
        throw TooManyCells("skew shape has " +
                           std::to_string(shape.cell_count()) +
                           " cells, limit " + std::to_string(max_cells));
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    std::vector<int> row_fill(outer.length());
    for (int row = 1; row <= outer.length(); ++row)
        row_fill[row - 1] = inner.part(row);
    std::vector<Filling> out;
    Filling current;
    enumerate_rec(outer, inner, row_fill, 1, shape.cell_count(), current, out);
    return out;
}

mpz_class oracle_total(int n, const Partition& mu, int max_rows) {
    mpz_class total = 0;
    for (const Partition& lambda : outer_shapes(n, mu, max_rows))
        total += count_syt(SkewShape(lambda, mu));
    return total;
}

} // namespace syt
