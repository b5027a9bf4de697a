#include "fock/partition.hpp"

#include <algorithm>
#include <functional>

namespace fock {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_multiset(std::vector<Int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<Int>());
    return Partition(std::move(parts));
}

Int Partition::part(Int row) const {
    if (row < 1)
        throw DomainError("row index must be >= 1");
    if (row > height())
        return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

Int Partition::rank() const {
    Int n = 0;
    for (Int p : parts_)
        n += p;
    return n;
}

bool Partition::can_add(Int row) const {
    if (row < 1 || row > height() + 1)
        return false;
    return row == 1 || part(row - 1) > part(row);
}

bool Partition::can_remove(Int row) const {
    if (row < 1 || row > height())
        return false;
    return part(row) > part(row + 1);
}

Partition Partition::added(Int row) const {
    if (!can_add(row))
        throw DomainError("node is not addable at this row");
    std::vector<Int> p = parts_;
    if (row == height() + 1)
        p.push_back(1);
    else
        ++p[static_cast<std::size_t>(row - 1)];
    return Partition(std::move(p));
}

Partition Partition::removed(Int row) const {
    if (!can_remove(row))
        throw DomainError("node is not removable at this row");
    std::vector<Int> p = parts_;
    --p[static_cast<std::size_t>(row - 1)];
    return Partition(std::move(p));
}

std::vector<Partition> partitions_of_rank(Int n) {
    if (n < 0)
        throw DomainError("rank must be nonnegative");
    std::vector<Partition> out;
    std::vector<Int> cur;
    std::function<void(Int, Int)> rec = [&](Int rest, Int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (Int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

} // namespace fock
