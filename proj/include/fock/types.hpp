#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fock {

using Int = long long;

// Raised when input text does not match the accepted grammar.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation is called outside its domain (bad precondition,
// inconsistent arguments).  Absence of a crystal operator is *not* an error.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal invariant fails (termination monitor, round-trip
// assertion, replay inconsistency).  Indicates a bug, not a caller mistake.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A box (row, col) in component comp of a multipartition diagram.
// All three indices are 1-based.
struct Node {
    Int row = 0;
    Int col = 0;
    Int comp = 0;

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

// Mathematical modulus: result always in [0, e).
inline Int pos_mod(Int x, Int e) {
    Int r = x % e;
    return r < 0 ? r + e : r;
}

} // namespace fock
