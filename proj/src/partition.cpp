#include "syt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace syt {

Partition Partition::make(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw NotWeaklyDecreasing("partition parts must be positive: " +
                                      std::to_string(parts[i]));
        if (i > 0 && parts[i] > parts[i - 1])
            throw NotWeaklyDecreasing("parts not weakly decreasing at index " +
                                      std::to_string(i));
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int row) const {
    if (row < 1 || row > length())
        return 0;
    return parts_[row - 1];
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out << ',';
        out << parts_[i];
    }
    return out.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        parts.push_back(std::stoi(token));
    }
    return make(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw std::invalid_argument("inner partition not contained in outer");
}

bool SkewShape::operator<(const SkewShape& other) const {
    if (outer_ == other.outer_)
        return inner_ < other.inner_;
    return outer_ < other.outer_;
}

namespace {

void gen_outer(int remaining, int max_part, int rows_left, std::vector<int>& acc,
               const Partition& mu, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition lambda = Partition::make(acc);
        if (contains(lambda, mu))
            out.push_back(std::move(lambda));
        return;
    }
    if (rows_left == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_outer(remaining - p, p, rows_left - 1, acc, mu, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> outer_shapes(int n, const Partition& mu, int max_rows) {
    if (mu.length() > max_rows)
        throw InnerTooLong("inner partition has more rows than max_rows");
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> acc;
    gen_outer(n, n, max_rows, acc, mu, out);
    return out;
}

std::vector<std::pair<int, int>> removable_corners(const SkewShape& shape) {
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    std::vector<std::pair<int, int>> corners;
    for (int i = 1; i <= outer.length(); ++i) {
        int len = outer.part(i);
        if (len == inner.part(i))
            continue; // row-end cell lies in the inner shape
        if (i == outer.length() || outer.part(i + 1) < len)
            corners.emplace_back(i, len);
    }
    return corners;
}

} // namespace syt
