#pragma once

#include <vector>

#include "fock/partition.hpp"
#include "fock/types.hpp"

namespace fock {

// An l-tuple of integer charges, components 1-based.
class Multicharge {
public:
    Multicharge() = default;
    explicit Multicharge(std::vector<Int> s);

    Int level() const { return static_cast<Int>(s_.size()); }
    Int at(Int comp) const;
    const std::vector<Int>& values() const { return s_; }

    // 0 <= s_c - s_c' < e for all c' < c.
    bool in_S_e(Int e) const;
    // 0 <= s_1 <= ... <= s_l < e (fundamental domain).
    bool in_D_e(Int e) const;
    bool weakly_increasing() const;

    friend bool operator==(const Multicharge&, const Multicharge&) = default;

private:
    std::vector<Int> s_;
};

// A formal pair of an l-multipartition and an l-charge; the universal object
// every map in this library acts on.  Immutable after construction.
class ChargedMultipartition {
public:
    ChargedMultipartition(std::vector<Partition> components, Multicharge charge);

    Int level() const { return static_cast<Int>(components_.size()); }
    const Partition& component(Int comp) const;
    const Multicharge& charge() const { return charge_; }
    Int rank() const;
    Int part(Int comp, Int row) const { return component(comp).part(row); }

    Int content(const Node& node) const;
    Int residue(const Node& node, Int e) const;

    bool has_node(const Node& node) const;
    std::vector<Node> addable_nodes() const;
    std::vector<Node> removable_nodes() const;
    ChargedMultipartition added(const Node& node) const;
    ChargedMultipartition removed(const Node& node) const;

    friend bool operator==(const ChargedMultipartition&,
                           const ChargedMultipartition&) = default;

private:
    std::vector<Partition> components_;
    Multicharge charge_;
};

ChargedMultipartition empty_multipartition(const Multicharge& charge);

// A charged multipartition with some rows "forgotten": masked rows keep their
// original indices, so contents of surviving rows never shift.
class MaskedMultipartition {
public:
    explicit MaskedMultipartition(ChargedMultipartition base);

    const ChargedMultipartition& base() const { return base_; }
    bool masked(Int comp, Int row) const;
    void mask_row(Int comp, Int row);
    // Surviving nonempty rows of a component, as 1-based row indices.
    std::vector<Int> surviving_rows(Int comp) const;

private:
    ChargedMultipartition base_;
    std::vector<std::vector<bool>> masked_;
};

bool is_cylindric(const ChargedMultipartition& m, Int e);
bool is_flotw(const ChargedMultipartition& m, Int e);

// All FLOTW multipartitions of rank exactly n over s (requires s in S_e).
// The parallel variant filters candidates with OpenMP; both return the same
// deterministically ordered list.
std::vector<ChargedMultipartition> enumerate_flotw(const Multicharge& s, Int e, Int n);
std::vector<ChargedMultipartition> enumerate_flotw_serial(const Multicharge& s, Int e, Int n);

// All l-partitions of rank exactly n over s, enumeration backend of the above.
std::vector<ChargedMultipartition> all_multipartitions(const Multicharge& s, Int n);

} // namespace fock
