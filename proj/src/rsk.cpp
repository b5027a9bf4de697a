#include "fock/rsk.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace fock {

namespace {

using Rows = std::vector<std::vector<Int>>;

// Transpose between tableau rows and symbol display rows.
Rows transpose(const Rows& rows) {
    Rows out;
    if (rows.empty())
        return out;
    out.resize(rows.front().size());
    for (std::size_t j = 0; j < out.size(); ++j)
        for (const auto& row : rows) {
            if (j >= row.size())
                break;
            out[j].push_back(row[j]);
        }
    return out;
}

} // namespace

InsertionResult insert_word(const std::vector<Int>& word) {
    Rows tableau;
    Rows record;
    for (std::size_t k = 0; k < word.size(); ++k) {
        Int carry = word[k];
        std::size_t r = 0;
        while (true) {
            if (r == tableau.size()) {
                tableau.emplace_back();
                record.emplace_back();
            }
            auto& row = tableau[r];
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                record[r].push_back(static_cast<Int>(k + 1));
                break;
            }
            std::swap(carry, *it);
            ++r;
        }
    }
    return InsertionResult{transpose(tableau), RecordingSymbol{transpose(record)}};
}

RsResult rs(const ChargedMultipartition& m, std::optional<Int> p) {
    Int size = p.value_or(default_symbol_size(m));
    Symbol sym = build_symbol(m, size);
    InsertionResult ins = insert_word(reading(sym));
    if (static_cast<Int>(ins.p_rows.size()) != m.level())
        throw InternalError("insertion did not produce one symbol row per component");
    // Display rows carry component l first; Symbol stores component 1 first.
    Rows comp_rows(ins.p_rows.rbegin(), ins.p_rows.rend());
    ChargedMultipartition image = to_charged(Symbol(std::move(comp_rows), size));
    return RsResult{std::move(image), std::move(ins.q), size};
}

ChargedMultipartition inverse_rs(const ChargedMultipartition& image,
                                 const RecordingSymbol& q, Int p) {
    Int l = image.level();
    Symbol sym = build_symbol(image, p);
    Rows display = sym.display_rows();
    if (static_cast<Int>(q.rows.size()) != l)
        throw DomainError("recording symbol level differs from image level");
    for (Int j = 0; j < l; ++j)
        if (q.rows[static_cast<std::size_t>(j)].size() !=
            display[static_cast<std::size_t>(j)].size())
            throw DomainError("recording symbol shape differs from image symbol");

    // Rebuild the tableaux; display rows are their columns, so the display
    // lengths must weakly decrease to give a Young shape.
    for (std::size_t j = 0; j + 1 < display.size(); ++j)
        if (display[j].size() < display[j + 1].size())
            throw DomainError("image symbol is not of tableau shape");
    Rows tableau = transpose(display);
    Rows record = transpose(q.rows);

    std::size_t total = 0;
    for (const auto& row : tableau)
        total += row.size();

    // Locate each step's cell and check the steps are a permutation of 1..n.
    std::vector<std::pair<std::size_t, std::size_t>> cell_of(total + 1,
                                                             {SIZE_MAX, SIZE_MAX});
    for (std::size_t r = 0; r < record.size(); ++r)
        for (std::size_t j = 0; j < record[r].size(); ++j) {
            Int k = record[r][j];
            if (k < 1 || k > static_cast<Int>(total) ||
                cell_of[static_cast<std::size_t>(k)].first != SIZE_MAX)
                throw DomainError("recording symbol entries are not a permutation");
            cell_of[static_cast<std::size_t>(k)] = {r, j};
        }

    std::vector<Int> word(total, 0);
    for (std::size_t k = total; k >= 1; --k) {
        auto [r, j] = cell_of[k];
        if (r >= tableau.size() || j + 1 != tableau[r].size() ||
            (r + 1 < tableau.size() && tableau[r + 1].size() > j))
            throw DomainError("recording symbol step is not a removable corner");
        Int carry = tableau[r].back();
        tableau[r].pop_back();
        if (tableau[r].empty())
            tableau.pop_back();
        for (std::size_t q_row = r; q_row-- > 0;) {
            auto& row = tableau[q_row];
            auto it = std::lower_bound(row.begin(), row.end(), carry);
            if (it == row.begin())
                throw DomainError("reverse bumping found no smaller entry");
            --it;
            std::swap(carry, *it);
        }
        word[k - 1] = carry;
    }

    // Split after each 0 into the reversed symbol rows, component l first.
    if (total == 0)
        throw DomainError("empty reading word has no charged preimage");
    if (word.back() != 0)
        throw DomainError("recovered word does not end a symbol row");
    Rows segments;
    std::vector<Int> seg;
    for (Int x : word) {
        seg.push_back(x);
        if (x == 0) {
            segments.push_back(seg);
            seg.clear();
        }
    }
    if (static_cast<Int>(segments.size()) != l)
        throw DomainError("recovered word does not split into one row per component");

    Rows comp_rows(static_cast<std::size_t>(l));
    for (Int j = 0; j < l; ++j) {
        auto row = segments[static_cast<std::size_t>(j)];
        std::reverse(row.begin(), row.end());
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (row[i] >= row[i + 1])
                throw DomainError("recovered symbol row is not strictly increasing");
        comp_rows[static_cast<std::size_t>(l - 1 - j)] = std::move(row);
    }
    return to_charged(Symbol(std::move(comp_rows), p));
}

} // namespace fock
