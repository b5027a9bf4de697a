#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fock/multipartition.hpp"
#include "fock/types.hpp"

namespace fock {

// Crystal structure selector: Finite(e) indexes operators by residue class,
// Infinite indexes them by content.
struct Mode {
    bool is_finite;
    Int e; // meaningful only when is_finite

    static Mode finite(Int e) {
        if (e <= 1)
            throw DomainError("e must be > 1");
        return Mode{true, e};
    }
    static Mode infinite() { return Mode{false, 0}; }
};

// One letter of an i-word: A for an addable node, R for a removable one.
struct WordEntry {
    bool addable;
    Node node;

    friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

using SignedWord = std::vector<WordEntry>;

// Addable/removable i-nodes in increasing (content, -component) order.
SignedWord i_word(const ChargedMultipartition& m, Mode mode, Int i);

// Deletes adjacent RA factors until none remain; result has shape A^a R^b.
SignedWord reduce_word(const SignedWord& w);

std::string letters(const SignedWord& w);

std::optional<Node> good_addable_node(const ChargedMultipartition& m, Mode mode, Int i);
std::optional<Node> good_removable_node(const ChargedMultipartition& m, Mode mode, Int i);

std::optional<ChargedMultipartition> f_op(const ChargedMultipartition& m, Mode mode, Int i);
std::optional<ChargedMultipartition> e_op(const ChargedMultipartition& m, Mode mode, Int i);

// Contents whose infinite-mode word is nonempty, in increasing order.
std::vector<Int> infinite_word_indices(const ChargedMultipartition& m);

struct HighestWeightResult {
    ChargedMultipartition vertex;
    std::vector<Int> path; // residues in application order
};

// Greedy ascent: tries residues 0..e-1 cyclically, restarting after each
// successful removal.  The endpoint is order-independent.
HighestWeightResult to_highest_weight(const ChargedMultipartition& m, Int e);

bool is_highest_weight(const ChargedMultipartition& m, Int e);

// Coefficients a_0..a_{e-1} of the fundamental weights in wt(m), delta term
// omitted: a_i = #{c : s_c = i mod e} + M_{i-1} - 2 M_i + M_{i+1}.
std::vector<Int> weight_coeffs(const ChargedMultipartition& m, Int e);

// For a highest weight vertex: the weakly increasing charge in D_e listing
// each residue i with multiplicity a_i.
Multicharge highest_weight_charge(const ChargedMultipartition& m, Int e);

struct CrystalGraph {
    struct Edge {
        std::size_t from;
        std::size_t to;
        Int residue;

        friend bool operator==(const Edge&, const Edge&) = default;
    };
    std::vector<ChargedMultipartition> vertices; // sorted by (rank, text)
    std::vector<Edge> edges;                     // sorted by (from, residue, to)

    friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;
};

// BFS closure of m under f_op through `depth` applications.  The OpenMP
// variant expands each frontier in parallel and merges deterministically;
// both functions return identical graphs.
CrystalGraph explore(const ChargedMultipartition& m, Int e, Int depth);
CrystalGraph explore_serial(const ChargedMultipartition& m, Int e, Int depth);

std::string to_dot(const CrystalGraph& g);
std::string to_text(const CrystalGraph& g);

struct OracleResult {
    ChargedMultipartition image;
    Multicharge charge;
};

// Path-tracking reference for the canonical isomorphism: ascend to the
// highest weight vertex, read the charge off the weight, replay the path
// down from the empty multipartition.
OracleResult canonical_oracle(const ChargedMultipartition& m, Int e);

} // namespace fock
