#pragma once

#include <vector>

#include "fock/types.hpp"

namespace fock {

// An integer partition stored as its positive parts in weakly decreasing
// order (trailing zeros implicit).  Rows are 1-based; part(a) returns 0 for
// rows past the height.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);

    // Builds from an arbitrary multiset of nonnegative integers.
    static Partition from_multiset(std::vector<Int> parts);

    Int part(Int row) const;
    Int height() const { return static_cast<Int>(parts_.size()); }
    Int rank() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<Int>& parts() const { return parts_; }

    // A node can be added at (row, part(row)+1) iff the result is a diagram.
    bool can_add(Int row) const;
    bool can_remove(Int row) const;
    Partition added(Int row) const;
    Partition removed(Int row) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Int> parts_;
};

// All partitions of n, in lexicographically decreasing order of part lists.
std::vector<Partition> partitions_of_rank(Int n);

} // namespace fock
