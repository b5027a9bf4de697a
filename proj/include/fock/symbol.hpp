#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fock/multipartition.hpp"
#include "fock/types.hpp"

namespace fock {

// The beta-number encoding of a charged multipartition at size p.  Row c has
// the p + s_c entries lambda^c_a - a + p + s_c, stored in increasing order.
// Displayed top-to-bottom as components l, ..., 1.
class Symbol {
public:
    Symbol(std::vector<std::vector<Int>> rows, Int p);

    Int level() const { return static_cast<Int>(rows_.size()); }
    Int size_p() const { return p_; }
    // Row of component comp (1-based), entries strictly increasing.
    const std::vector<Int>& row(Int comp) const;
    // Rows in display order: component l first.
    std::vector<std::vector<Int>> display_rows() const;

    friend bool operator==(const Symbol&, const Symbol&) = default;

private:
    std::vector<std::vector<Int>> rows_;
    Int p_;
};

// Smallest admissible symbol size, max(1, max_c(1 - s_c + h(lambda^c))).
Int default_symbol_size(const ChargedMultipartition& m);

Symbol build_symbol(const ChargedMultipartition& m, std::optional<Int> p = {});

// Exact inverse of build_symbol at the same p.
ChargedMultipartition to_charged(const Symbol& sym);

// Charge weakly increasing, rows strictly increasing, and in each left-aligned
// column the entries weakly increase from component l down to component 1.
bool is_semistandard(const Symbol& sym);

// Entries read right to left, starting from the top display row (component l).
std::vector<Int> reading(const Symbol& sym);

// Rows printed top (component l) to bottom, entries space-separated.
std::string to_string(const Symbol& sym);

} // namespace fock
