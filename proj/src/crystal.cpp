#include "fock/crystal.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "fock/textio.hpp"

namespace fock {

namespace {

bool selected(const ChargedMultipartition& m, const Node& node, Mode mode, Int i) {
    if (mode.is_finite)
        return m.residue(node, mode.e) == pos_mod(i, mode.e);
    return m.content(node) == i;
}

} // namespace

SignedWord i_word(const ChargedMultipartition& m, Mode mode, Int i) {
    if (mode.is_finite && (i < 0 || i >= mode.e))
        throw DomainError("residue index out of range");
    SignedWord word;
    for (const Node& n : m.addable_nodes())
        if (selected(m, n, mode, i))
            word.push_back(WordEntry{true, n});
    for (const Node& n : m.removable_nodes())
        if (selected(m, n, mode, i))
            word.push_back(WordEntry{false, n});
    std::sort(word.begin(), word.end(), [&](const WordEntry& a, const WordEntry& b) {
        Int ca = m.content(a.node), cb = m.content(b.node);
        if (ca != cb)
            return ca < cb;
        return a.node.comp > b.node.comp;
    });
    return word;
}

SignedWord reduce_word(const SignedWord& w) {
    SignedWord stack;
    for (const WordEntry& entry : w) {
        if (entry.addable && !stack.empty() && !stack.back().addable)
            stack.pop_back();
        else
            stack.push_back(entry);
    }
    return stack;
}

std::string letters(const SignedWord& w) {
    std::string out;
    out.reserve(w.size());
    for (const WordEntry& entry : w)
        out.push_back(entry.addable ? 'A' : 'R');
    return out;
}

std::optional<Node> good_addable_node(const ChargedMultipartition& m, Mode mode, Int i) {
    SignedWord red = reduce_word(i_word(m, mode, i));
    for (auto it = red.rbegin(); it != red.rend(); ++it)
        if (it->addable)
            return it->node;
    return std::nullopt;
}

std::optional<Node> good_removable_node(const ChargedMultipartition& m, Mode mode, Int i) {
    SignedWord red = reduce_word(i_word(m, mode, i));
    for (const WordEntry& entry : red)
        if (!entry.addable)
            return entry.node;
    return std::nullopt;
}

std::optional<ChargedMultipartition> f_op(const ChargedMultipartition& m, Mode mode, Int i) {
    auto node = good_addable_node(m, mode, i);
    if (!node)
        return std::nullopt;
    return m.added(*node);
}

std::optional<ChargedMultipartition> e_op(const ChargedMultipartition& m, Mode mode, Int i) {
    auto node = good_removable_node(m, mode, i);
    if (!node)
        return std::nullopt;
    return m.removed(*node);
}

std::vector<Int> infinite_word_indices(const ChargedMultipartition& m) {
    std::set<Int> contents;
    for (const Node& n : m.addable_nodes())
        contents.insert(m.content(n));
    for (const Node& n : m.removable_nodes())
        contents.insert(m.content(n));
    return {contents.begin(), contents.end()};
}

HighestWeightResult to_highest_weight(const ChargedMultipartition& m, Int e) {
    if (e <= 1)
        throw DomainError("e must be > 1");
    ChargedMultipartition cur = m;
    std::vector<Int> path;
    bool removed = true;
    while (removed) {
        removed = false;
        for (Int i = 0; i < e; ++i) {
            if (auto next = e_op(cur, Mode::finite(e), i)) {
                cur = std::move(*next);
                path.push_back(i);
                removed = true;
                break;
            }
        }
    }
    return HighestWeightResult{std::move(cur), std::move(path)};
}

bool is_highest_weight(const ChargedMultipartition& m, Int e) {
    for (Int i = 0; i < e; ++i)
        if (good_removable_node(m, Mode::finite(e), i))
            return false;
    return true;
}

std::vector<Int> weight_coeffs(const ChargedMultipartition& m, Int e) {
    if (e <= 1)
        throw DomainError("e must be > 1");
    std::vector<Int> node_counts(static_cast<std::size_t>(e), 0);
    for (Int c = 1; c <= m.level(); ++c)
        for (Int a = 1; a <= m.component(c).height(); ++a)
            for (Int b = 1; b <= m.part(c, a); ++b)
                ++node_counts[static_cast<std::size_t>(m.residue(Node{a, b, c}, e))];
    std::vector<Int> coeffs(static_cast<std::size_t>(e), 0);
    for (Int c = 1; c <= m.level(); ++c)
        ++coeffs[static_cast<std::size_t>(pos_mod(m.charge().at(c), e))];
    for (Int i = 0; i < e; ++i) {
        coeffs[static_cast<std::size_t>(i)] +=
            node_counts[static_cast<std::size_t>(pos_mod(i - 1, e))] -
            2 * node_counts[static_cast<std::size_t>(i)] +
            node_counts[static_cast<std::size_t>(pos_mod(i + 1, e))];
    }
    return coeffs;
}

Multicharge highest_weight_charge(const ChargedMultipartition& m, Int e) {
    if (!is_highest_weight(m, e))
        throw DomainError("multipartition is not a highest weight vertex");
    std::vector<Int> coeffs = weight_coeffs(m, e);
    std::vector<Int> charge;
    for (Int i = 0; i < e; ++i) {
        Int a = coeffs[static_cast<std::size_t>(i)];
        if (a < 0)
            throw InternalError("negative weight coefficient at highest weight");
        for (Int k = 0; k < a; ++k)
            charge.push_back(i);
    }
    if (static_cast<Int>(charge.size()) != m.level())
        throw InternalError("weight coefficients do not sum to the level");
    return Multicharge(std::move(charge));
}

namespace {

CrystalGraph explore_impl(const ChargedMultipartition& m, Int e, Int depth,
                          bool parallel) {
    if (e <= 1)
        throw DomainError("e must be > 1");
    if (depth < 0)
        throw DomainError("depth must be nonnegative");

    std::vector<ChargedMultipartition> vertices{m};
    std::map<std::string, std::size_t> index{{format(m), 0}};
    std::vector<std::size_t> frontier{0};
    std::vector<std::size_t> expandable; // vertices at levels < depth

    for (Int level = 0; level < depth && !frontier.empty(); ++level) {
        expandable.insert(expandable.end(), frontier.begin(), frontier.end());
        std::vector<std::vector<ChargedMultipartition>> children(frontier.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long long fi = 0; fi < static_cast<long long>(frontier.size()); ++fi) {
            const ChargedMultipartition& v =
                vertices[frontier[static_cast<std::size_t>(fi)]];
            for (Int i = 0; i < e; ++i)
                if (auto child = f_op(v, Mode::finite(e), i))
                    children[static_cast<std::size_t>(fi)].push_back(std::move(*child));
        }
        // Deterministic merge: frontier order, then per-parent operator order.
        std::vector<std::size_t> next;
        for (const auto& batch : children)
            for (const ChargedMultipartition& child : batch) {
                std::string key = format(child);
                auto [it, inserted] = index.try_emplace(key, vertices.size());
                if (inserted) {
                    vertices.push_back(child);
                    next.push_back(it->second);
                }
            }
        frontier = std::move(next);
    }

    // Sort vertices by (rank, formatted text) and remap indices.
    std::vector<std::size_t> order(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::vector<std::pair<Int, std::string>> keys(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        keys[i] = {vertices[i].rank(), format(vertices[i])};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return keys[a] < keys[b];
    });
    std::vector<std::size_t> new_index(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        new_index[order[i]] = i;

    CrystalGraph g;
    g.vertices.reserve(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        g.vertices.push_back(vertices[order[i]]);

    // Second pass: edges out of every expanded vertex.
    std::vector<std::vector<CrystalGraph::Edge>> edge_buckets(expandable.size());
    std::atomic<bool> missing_target{false};
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long bi = 0; bi < static_cast<long long>(expandable.size()); ++bi) {
        std::size_t vi = expandable[static_cast<std::size_t>(bi)];
        const ChargedMultipartition& v = vertices[vi];
        for (Int i = 0; i < e; ++i)
            if (auto child = f_op(v, Mode::finite(e), i)) {
                auto it = index.find(format(*child));
                if (it == index.end()) {
                    missing_target = true;
                    continue;
                }
                edge_buckets[static_cast<std::size_t>(bi)].push_back(
                    CrystalGraph::Edge{new_index[vi], new_index[it->second], i});
            }
    }
    if (missing_target)
        throw InternalError("explored edge target missing from vertex set");
    for (const auto& bucket : edge_buckets)
        g.edges.insert(g.edges.end(), bucket.begin(), bucket.end());
    std::sort(g.edges.begin(), g.edges.end(),
              [](const CrystalGraph::Edge& a, const CrystalGraph::Edge& b) {
                  return std::tie(a.from, a.residue, a.to) <
                         std::tie(b.from, b.residue, b.to);
              });
    return g;
}

} // namespace

CrystalGraph explore(const ChargedMultipartition& m, Int e, Int depth) {
    return explore_impl(m, e, depth, true);
}

CrystalGraph explore_serial(const ChargedMultipartition& m, Int e, Int depth) {
    return explore_impl(m, e, depth, false);
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  n" << i << " [label=\"" << format(g.vertices[i]) << "\"];\n";
    for (const auto& edge : g.edges)
        os << "  n" << edge.from << " -> n" << edge.to << " [label=\"" << edge.residue
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_text(const CrystalGraph& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "vertex " << i << ": " << format(g.vertices[i]) << '\n';
    for (const auto& edge : g.edges)
        os << "edge " << edge.from << " -> " << edge.to << " [" << edge.residue
           << "]\n";
    return os.str();
}

OracleResult canonical_oracle(const ChargedMultipartition& m, Int e) {
    HighestWeightResult hw = to_highest_weight(m, e);
    Multicharge charge = highest_weight_charge(hw.vertex, e);
    ChargedMultipartition cur = empty_multipartition(charge);
    for (auto it = hw.path.rbegin(); it != hw.path.rend(); ++it) {
        auto next = f_op(cur, Mode::finite(e), *it);
        if (!next)
            throw InternalError("oracle replay hit an undefined operator");
        cur = std::move(*next);
    }
    return OracleResult{std::move(cur), std::move(charge)};
}

} // namespace fock
