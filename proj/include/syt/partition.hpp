#ifndef SYT_PARTITION_HPP
#define SYT_PARTITION_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syt {

struct NotWeaklyDecreasing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InnerTooLong : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integer partition: weakly decreasing sequence of positive parts.
/// Stored zero-stripped; the empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;

    // Accepts trailing zeros; rejects sequences that are not weakly
    // decreasing after stripping them.
    static Partition make(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    // 1-indexed part access; rows past the last part read as 0.
    int part(int row) const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

    // "4,3,1"; empty string for the empty partition.
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {}
    std::vector<int> parts_;
};

bool contains(const Partition& outer, const Partition& inner);

/// Skew shape outer/inner with the containment invariant enforced at
/// construction.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int cell_count() const { return outer_.size() - inner_.size(); }

    bool operator==(const SkewShape&) const = default;
    bool operator<(const SkewShape& other) const;

private:
    Partition outer_;
    Partition inner_;
};

// All partitions lambda of n with at most max_rows parts containing mu,
// in lexicographically decreasing order.
std::vector<Partition> outer_shapes(int n, const Partition& mu, int max_rows);

// Cells (row, col), 1-indexed, whose removal from outer leaves a valid
// partition still containing inner.
std::vector<std::pair<int, int>> removable_corners(const SkewShape& shape);

} // namespace syt

#endif
