#include "fock/multipartition.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fock {

Multicharge::Multicharge(std::vector<Int> s) : s_(std::move(s)) {
    if (s_.empty())
        throw DomainError("multicharge must have at least one component");
}

Int Multicharge::at(Int comp) const {
    if (comp < 1 || comp > level())
        throw DomainError("multicharge component out of range");
    return s_[static_cast<std::size_t>(comp - 1)];
}

bool Multicharge::in_S_e(Int e) const {
    for (Int c2 = 2; c2 <= level(); ++c2)
        for (Int c1 = 1; c1 < c2; ++c1) {
            Int d = at(c2) - at(c1);
            if (d < 0 || d >= e)
                return false;
        }
    return true;
}

bool Multicharge::in_D_e(Int e) const {
    if (at(1) < 0 || at(level()) >= e)
        return false;
    return weakly_increasing();
}

bool Multicharge::weakly_increasing() const {
    for (Int c = 1; c < level(); ++c)
        if (at(c) > at(c + 1))
            return false;
    return true;
}

ChargedMultipartition::ChargedMultipartition(std::vector<Partition> components,
                                             Multicharge charge)
    : components_(std::move(components)), charge_(std::move(charge)) {
    if (components_.empty())
        throw DomainError("multipartition must have at least one component");
    if (static_cast<Int>(components_.size()) != charge_.level())
        throw DomainError("multipartition and multicharge levels differ");
}

const Partition& ChargedMultipartition::component(Int comp) const {
    if (comp < 1 || comp > level())
        throw DomainError("component index out of range");
    return components_[static_cast<std::size_t>(comp - 1)];
}

Int ChargedMultipartition::rank() const {
    Int n = 0;
    for (const Partition& p : components_)
        n += p.rank();
    return n;
}

Int ChargedMultipartition::content(const Node& node) const {
    return node.col - node.row + charge_.at(node.comp);
}

Int ChargedMultipartition::residue(const Node& node, Int e) const {
    if (e <= 1)
        throw DomainError("e must be > 1");
    return pos_mod(content(node), e);
}

bool ChargedMultipartition::has_node(const Node& node) const {
    if (node.comp < 1 || node.comp > level() || node.row < 1 || node.col < 1)
        return false;
    return node.col <= part(node.comp, node.row);
}

std::vector<Node> ChargedMultipartition::addable_nodes() const {
    std::vector<Node> out;
    for (Int c = 1; c <= level(); ++c) {
        const Partition& p = component(c);
        for (Int a = 1; a <= p.height() + 1; ++a)
            if (p.can_add(a))
                out.push_back(Node{a, p.part(a) + 1, c});
    }
    return out;
}

std::vector<Node> ChargedMultipartition::removable_nodes() const {
    std::vector<Node> out;
    for (Int c = 1; c <= level(); ++c) {
        const Partition& p = component(c);
        for (Int a = 1; a <= p.height(); ++a)
            if (p.can_remove(a))
                out.push_back(Node{a, p.part(a), c});
    }
    return out;
}

ChargedMultipartition ChargedMultipartition::added(const Node& node) const {
    if (node.comp < 1 || node.comp > level())
        throw DomainError("component index out of range");
    if (node.col != part(node.comp, node.row) + 1)
        throw DomainError("node is not the addable position of its row");
    std::vector<Partition> comps = components_;
    comps[static_cast<std::size_t>(node.comp - 1)] =
        component(node.comp).added(node.row);
    return ChargedMultipartition(std::move(comps), charge_);
}

ChargedMultipartition ChargedMultipartition::removed(const Node& node) const {
    if (node.comp < 1 || node.comp > level())
        throw DomainError("component index out of range");
    if (node.col != part(node.comp, node.row))
        throw DomainError("node is not the rightmost node of its row");
    std::vector<Partition> comps = components_;
    comps[static_cast<std::size_t>(node.comp - 1)] =
        component(node.comp).removed(node.row);
    return ChargedMultipartition(std::move(comps), charge_);
}

ChargedMultipartition empty_multipartition(const Multicharge& charge) {
    return ChargedMultipartition(
        std::vector<Partition>(static_cast<std::size_t>(charge.level())), charge);
}

MaskedMultipartition::MaskedMultipartition(ChargedMultipartition base)
    : base_(std::move(base)) {
    masked_.resize(static_cast<std::size_t>(base_.level()));
    for (Int c = 1; c <= base_.level(); ++c)
        masked_[static_cast<std::size_t>(c - 1)]
            .resize(static_cast<std::size_t>(base_.component(c).height()), false);
}

bool MaskedMultipartition::masked(Int comp, Int row) const {
    const auto& v = masked_[static_cast<std::size_t>(comp - 1)];
    if (row < 1 || row > static_cast<Int>(v.size()))
        throw DomainError("row index out of range");
    return v[static_cast<std::size_t>(row - 1)];
}

void MaskedMultipartition::mask_row(Int comp, Int row) {
    auto& v = masked_[static_cast<std::size_t>(comp - 1)];
    if (row < 1 || row > static_cast<Int>(v.size()))
        throw DomainError("row index out of range");
    v[static_cast<std::size_t>(row - 1)] = true;
}

std::vector<Int> MaskedMultipartition::surviving_rows(Int comp) const {
    std::vector<Int> rows;
    for (Int a = 1; a <= base_.component(comp).height(); ++a)
        if (!masked(comp, a))
            rows.push_back(a);
    return rows;
}

bool is_cylindric(const ChargedMultipartition& m, Int e) {
    if (e <= 1)
        throw DomainError("e must be > 1");
    const Multicharge& s = m.charge();
    if (!s.in_S_e(e))
        return false;
    Int l = m.level();
    for (Int c = 1; c <= l; ++c) {
        Int next = (c == l) ? 1 : c + 1;
        Int shift = (c == l) ? e + s.at(1) - s.at(l) : s.at(c + 1) - s.at(c);
        Int bound = std::max(m.component(c).height(), m.component(next).height());
        for (Int a = 1; a <= bound; ++a)
            if (m.part(c, a) < m.part(next, a + shift))
                return false;
    }
    return true;
}

bool is_flotw(const ChargedMultipartition& m, Int e) {
    if (!is_cylindric(m, e))
        return false;
    // Residues of the rightmost nodes of the rows of each length must leave
    // at least one class of [0, e) uncovered.
    std::set<Int> widths;
    for (Int c = 1; c <= m.level(); ++c)
        for (Int p : m.component(c).parts())
            widths.insert(p);
    for (Int alpha : widths) {
        std::vector<bool> seen(static_cast<std::size_t>(e), false);
        Int covered = 0;
        for (Int c = 1; c <= m.level(); ++c)
            for (Int a = 1; a <= m.component(c).height(); ++a)
                if (m.part(c, a) == alpha) {
                    Int r = m.residue(Node{a, alpha, c}, e);
                    if (!seen[static_cast<std::size_t>(r)]) {
                        seen[static_cast<std::size_t>(r)] = true;
                        ++covered;
                    }
                }
        if (covered == e)
            return false;
    }
    return true;
}

std::vector<ChargedMultipartition> all_multipartitions(const Multicharge& s, Int n) {
    if (n < 0)
        throw DomainError("rank must be nonnegative");
    Int l = s.level();
    std::vector<std::vector<Partition>> by_rank;
    for (Int k = 0; k <= n; ++k)
        by_rank.push_back(partitions_of_rank(k));

    std::vector<ChargedMultipartition> out;
    std::vector<Partition> cur;
    std::function<void(Int, Int)> rec = [&](Int comp, Int rest) {
        if (comp == l) {
            cur.push_back(Partition{});
            auto& last = cur.back();
            for (const Partition& p : by_rank[static_cast<std::size_t>(rest)]) {
                last = p;
                out.emplace_back(cur, s);
            }
            cur.pop_back();
            return;
        }
        for (Int k = 0; k <= rest; ++k)
            for (const Partition& p : by_rank[static_cast<std::size_t>(k)]) {
                cur.push_back(p);
                rec(comp + 1, rest - k);
                cur.pop_back();
            }
    };
    rec(1, n);
    return out;
}

namespace {

std::vector<ChargedMultipartition> enumerate_flotw_impl(const Multicharge& s, Int e,
                                                        Int n, bool parallel) {
    if (e <= 1)
        throw DomainError("e must be > 1");
    if (!s.in_S_e(e))
        throw DomainError("multicharge must lie in S_e");
    std::vector<ChargedMultipartition> cands = all_multipartitions(s, n);
    std::vector<char> keep(cands.size(), 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < static_cast<long long>(cands.size()); ++i)
            keep[static_cast<std::size_t>(i)] =
                is_flotw(cands[static_cast<std::size_t>(i)], e) ? 1 : 0;
    } else {
        for (std::size_t i = 0; i < cands.size(); ++i)
            keep[i] = is_flotw(cands[i], e) ? 1 : 0;
    }
    std::vector<ChargedMultipartition> out;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (keep[i])
            out.push_back(std::move(cands[i]));
    return out;
}

} // namespace

std::vector<ChargedMultipartition> enumerate_flotw(const Multicharge& s, Int e, Int n) {
    return enumerate_flotw_impl(s, e, n, true);
}

std::vector<ChargedMultipartition> enumerate_flotw_serial(const Multicharge& s, Int e,
                                                          Int n) {
    return enumerate_flotw_impl(s, e, n, false);
}

} // namespace fock
