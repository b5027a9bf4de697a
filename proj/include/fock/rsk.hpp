#pragma once

#include <optional>
#include <vector>

#include "fock/multipartition.hpp"
#include "fock/symbol.hpp"
#include "fock/types.hpp"

namespace fock {

// Shape-mate of an inserted symbol: entry k marks the cell created at
// insertion step k.  Rows stored in display order, component l first.
struct RecordingSymbol {
    std::vector<std::vector<Int>> rows;

    friend bool operator==(const RecordingSymbol&, const RecordingSymbol&) = default;
};

struct InsertionResult {
    std::vector<std::vector<Int>> p_rows; // display order, component l first
    RecordingSymbol q;
};

// Schensted row bumping, letter by letter, into the transposed symbol; each
// letter displaces the leftmost strictly greater entry of a row or lands at
// its end.  p_rows are the tableau columns, first column on top.
InsertionResult insert_word(const std::vector<Int>& word);

struct RsResult {
    ChargedMultipartition image;
    RecordingSymbol q;
    Int p;
};

// Reads the symbol of m at size p (default: minimal admissible), inserts the
// reading, and reconstructs the charged multipartition of the resulting
// semistandard symbol.  The canonical crystal isomorphism for e = infinity.
RsResult rs(const ChargedMultipartition& m, std::optional<Int> p = {});

// Reverse bumping in decreasing step order; recovers the unique preimage of
// image under rs whose recording symbol is q at size p.
ChargedMultipartition inverse_rs(const ChargedMultipartition& image,
                                 const RecordingSymbol& q, Int p);

} // namespace fock
