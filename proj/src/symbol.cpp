#include "fock/symbol.hpp"

#include <algorithm>
#include <sstream>

namespace fock {

Symbol::Symbol(std::vector<std::vector<Int>> rows, Int p)
    : rows_(std::move(rows)), p_(p) {
    if (rows_.empty())
        throw DomainError("symbol must have at least one row");
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (row[i] >= row[i + 1])
                throw DomainError("symbol rows must be strictly increasing");
        if (!row.empty() && row.front() < 0)
            throw DomainError("symbol entries must be nonnegative");
    }
}

const std::vector<Int>& Symbol::row(Int comp) const {
    if (comp < 1 || comp > level())
        throw DomainError("symbol row index out of range");
    return rows_[static_cast<std::size_t>(comp - 1)];
}

std::vector<std::vector<Int>> Symbol::display_rows() const {
    return {rows_.rbegin(), rows_.rend()};
}

Int default_symbol_size(const ChargedMultipartition& m) {
    Int bound = 1;
    for (Int c = 1; c <= m.level(); ++c)
        bound = std::max(bound, 1 - m.charge().at(c) + m.component(c).height());
    return bound;
}

Symbol build_symbol(const ChargedMultipartition& m, std::optional<Int> p) {
    Int bound = default_symbol_size(m);
    Int size = p.value_or(bound);
    if (size < bound) {
        std::ostringstream os;
        os << "symbol size " << size << " below admissible bound " << bound;
        throw DomainError(os.str());
    }
    std::vector<std::vector<Int>> rows;
    for (Int c = 1; c <= m.level(); ++c) {
        Int len = size + m.charge().at(c);
        std::vector<Int> row(static_cast<std::size_t>(len));
        for (Int a = 1; a <= len; ++a)
            row[static_cast<std::size_t>(len - a)] =
                m.part(c, a) - a + size + m.charge().at(c);
        rows.push_back(std::move(row));
    }
    return Symbol(std::move(rows), size);
}

ChargedMultipartition to_charged(const Symbol& sym) {
    std::vector<Partition> comps;
    std::vector<Int> s;
    for (Int c = 1; c <= sym.level(); ++c) {
        const auto& row = sym.row(c);
        Int len = static_cast<Int>(row.size());
        s.push_back(len - sym.size_p());
        std::vector<Int> parts;
        for (Int k = 1; k <= len; ++k) {
            Int entry = row[static_cast<std::size_t>(len - k)];
            Int part = entry - (len - k);
            if (part < 0)
                throw DomainError("symbol row encodes a negative part");
            parts.push_back(part);
        }
        comps.emplace_back(std::move(parts));
    }
    return ChargedMultipartition(std::move(comps), Multicharge(std::move(s)));
}

bool is_semistandard(const Symbol& sym) {
    for (Int c = 1; c < sym.level(); ++c)
        if (static_cast<Int>(sym.row(c).size()) > static_cast<Int>(sym.row(c + 1).size()))
            return false; // row lengths are p + s_c, so this is s_c <= s_{c+1}
    for (Int c = sym.level(); c >= 2; --c) {
        const auto& upper = sym.row(c);     // displayed above
        const auto& lower = sym.row(c - 1); // displayed below
        std::size_t overlap = std::min(upper.size(), lower.size());
        for (std::size_t j = 0; j < overlap; ++j)
            if (upper[j] > lower[j])
                return false;
    }
    return true; // strict row increase holds by construction
}

std::vector<Int> reading(const Symbol& sym) {
    std::vector<Int> word;
    for (Int c = sym.level(); c >= 1; --c) {
        const auto& row = sym.row(c);
        word.insert(word.end(), row.rbegin(), row.rend());
    }
    return word;
}

std::string to_string(const Symbol& sym) {
    std::ostringstream os;
    for (Int c = sym.level(); c >= 1; --c) {
        const auto& row = sym.row(c);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                os << ' ';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

} // namespace fock
