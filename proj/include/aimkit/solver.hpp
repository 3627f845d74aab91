#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "kernel.hpp"

namespace aimkit {

/// The rule that fired at a search-tree node. Declaration order is precedence order.
enum class Rule { RR1, RR2, Step1, Step2, Step3, Step4, Step5, Step6, Step7, Step8 };

inline const char* rule_label(Rule r) {
    static constexpr std::array<const char*, 10> labels = {"rr1",   "rr2",   "step1", "step2", "step3",
                                                           "step4", "step5", "step6", "step7", "step8"};
    return labels[static_cast<std::size_t>(r)];
}

/// One child of a branching: delete `removed` from the graph and charge
/// `charged` to the deletion set. removed \ charged are vertices left as
/// matched edges, isolated once `charged` is gone.
struct Branch {
    VertexSet charged;
    VertexSet removed;

    std::size_t spend() const { return charged.size(); }
};

struct Expansion {
    Rule rule;
    std::vector<Branch> branches;
};

struct SearchStats {
    std::uint64_t nodes_total = 0;
    std::map<std::string, std::uint64_t> nodes_per_step;
    std::size_t max_depth = 0;
    std::uint64_t kernel_calls = 0;
    std::size_t max_step8_on_path = 0;
    std::uint64_t crowns_applied = 0;
    std::uint64_t crowns_verified = 0;
    std::uint64_t audits = 0;
};

struct SolveResult {
    bool yes = false;
    std::optional<VertexSet> witness;
    SearchStats stats;
};

struct SolveOptions {
    // Re-derive the applicable rule and the branch bookkeeping independently at
    // every node; any disagreement raises InternalError.
    bool audit = false;
    bool verify_crowns = false;
};

inline std::vector<std::size_t> spends(const std::vector<Branch>& branches) {
    std::vector<std::size_t> out;
    for (const auto& b : branches) out.push_back(b.spend());
    return out;
}

/// Keep v: v and u form a matched edge, N({v,u}) is charged.
inline Branch pair_branch(const Graph& g, Vertex v, Vertex u) {
    const VertexSet pair{v, u};
    return Branch{open_neighborhood(g, pair), closed_neighborhood(g, pair)};
}

inline Branch delete_branch(Vertex v) { return Branch{VertexSet{v}, VertexSet{v}}; }

/// Rule B1: delete v, or match v with each neighbor in id order.
inline std::vector<Branch> branch_b1(const Graph& g, Vertex v) {
    std::vector<Branch> out{delete_branch(v)};
    for (Vertex u : g.neighbors(v)) out.push_back(pair_branch(g, v, u));
    return out;
}

inline bool dominates(const Graph& g, Vertex v, Vertex u) {
    if (!g.has_edge(v, u)) return false;
    for (Vertex w : g.neighbors(u))
        if (w != v && !g.has_edge(v, w)) return false;
    return true;
}

/// Rule B2 for v dominating u: delete v, or match v with u.
inline std::vector<Branch> branch_b2(const Graph& g, Vertex v, Vertex u) {
    if (!dominates(g, v, u))
        throw InternalError("B2 on " + std::to_string(v) + " which does not dominate " + std::to_string(u));
    return {delete_branch(v), pair_branch(g, v, u)};
}

/// A component in which every vertex has degree 2: delete its smallest vertex.
inline std::optional<Branch> rr1(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        bool cycle = true;
        for (Vertex v : comp)
            if (g.degree(v) != 2) {
                cycle = false;
                break;
            }
        if (cycle) return delete_branch(comp.front());
    }
    return std::nullopt;
}

/// Degree-1 v next to degree-2 u: keep the edge vu.
inline std::optional<Branch> rr2(const Graph& g) {
    for (Vertex v : g.live_vertices()) {
        if (g.degree(v) != 1) continue;
        const Vertex u = g.neighbors(v)[0];
        if (g.degree(u) == 2) return pair_branch(g, v, u);
    }
    return std::nullopt;
}

namespace detail {

inline Vertex other_neighbor(const Graph& g, Vertex v, Vertex not_this) {
    auto n = g.neighbors(v);
    return n[0] == not_this ? n[1] : n[0];
}

} // namespace detail

/// u0 u1 u2 u3 u4 with d(u0) >= 3 and u1, u2, u3 of degree 2; u4 may equal u0.
inline std::optional<std::array<Vertex, 5>> find_chain(const Graph& g) {
    for (Vertex u0 : g.live_vertices()) {
        if (g.degree(u0) < 3) continue;
        for (Vertex u1 : g.neighbors(u0)) {
            if (g.degree(u1) != 2) continue;
            const Vertex u2 = detail::other_neighbor(g, u1, u0);
            if (g.degree(u2) != 2) continue;
            const Vertex u3 = detail::other_neighbor(g, u2, u1);
            if (g.degree(u3) != 2) continue;
            return std::array<Vertex, 5>{u0, u1, u2, u3, detail::other_neighbor(g, u3, u2)};
        }
    }
    return std::nullopt;
}

/// u0 u1 u2 u3 with d(u0), d(u3) >= 3 and d(u1) = d(u2) = 2; u3 may equal u0.
inline std::optional<std::array<Vertex, 4>> find_short_chain(const Graph& g) {
    for (Vertex u0 : g.live_vertices()) {
        if (g.degree(u0) < 3) continue;
        for (Vertex u1 : g.neighbors(u0)) {
            if (g.degree(u1) != 2) continue;
            const Vertex u2 = detail::other_neighbor(g, u1, u0);
            if (g.degree(u2) != 2) continue;
            const Vertex u3 = detail::other_neighbor(g, u2, u1);
            if (g.degree(u3) >= 3) return std::array<Vertex, 4>{u0, u1, u2, u3};
        }
    }
    return std::nullopt;
}

namespace detail {

// Branch `first` followed, inside the child, by `then` computed on the child graph.
inline Branch compose(const Branch& first, const Branch& then) {
    return Branch{set_union(first.charged, then.charged), set_union(first.removed, then.removed)};
}

inline Expansion step2(const Graph& g, const std::array<Vertex, 5>& c) {
    const auto [u0, u1, u2, u3, u4] = c;
    (void)u4;
    // Deleting u1 leaves u2 as a degree-1 tail on the degree-2 vertex u3.
    const Graph without_u1 = delete_vertices(g, VertexSet{u1});
    if (without_u1.degree(u2) != 1 || without_u1.degree(u3) != 2) throw InternalError("chain tail is not RR2-shaped");
    return {Rule::Step2,
            {compose(delete_branch(u1), pair_branch(without_u1, u2, u3)), pair_branch(g, u1, u0),
             pair_branch(g, u1, u2)}};
}

inline Expansion step3(const Graph& g, const std::array<Vertex, 4>& c) {
    const auto [u0, u1, u2, u3] = c;
    if (u0 == u3) throw InternalError("closed short chain should have been taken by Step 1");
    // Deleting u1 makes u3 dominate the tail u2.
    const Graph without_u1 = delete_vertices(g, VertexSet{u1});
    const auto inner = branch_b2(without_u1, u3, u2);
    // Deleting u3 as well isolates u2, which must then be deleted too.
    const Branch both{VertexSet{u1, u2, u3}, VertexSet{u1, u2, u3}};
    return {Rule::Step3,
            {both, compose(delete_branch(u1), inner[1]), pair_branch(g, u1, u0), pair_branch(g, u1, u2)}};
}

inline Expansion step7(const Graph& g, Vertex v) {
    const auto n = g.neighbors(v);
    std::vector<std::pair<Vertex, Vertex>> inner;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (g.has_edge(n[i], n[j])) inner.emplace_back(n[i], n[j]);
    if (inner.size() != 1) throw InternalError("Step 7 needs exactly one edge among the neighbors of v");
    auto [a, b] = inner.front();
    // u1 is the degree-4 endpoint of the inner edge if exactly one is; otherwise the smaller id.
    Vertex u1 = a, u2 = b;
    if (g.degree(a) != 4 && g.degree(b) == 4) std::swap(u1, u2);
    Vertex u3 = n[0];
    for (Vertex w : n)
        if (w != u1 && w != u2) u3 = w;

    // Deleting u3 leaves v of degree 2 inside the triangle v u1 u2, dominated by u1.
    const Graph without_u3 = delete_vertices(g, VertexSet{u3});
    const auto inner_b2 = branch_b2(without_u3, u1, v);
    std::vector<Branch> out{compose(delete_branch(u3), inner_b2[0]), compose(delete_branch(u3), inner_b2[1])};
    for (Vertex w : g.neighbors(u3)) out.push_back(pair_branch(g, u3, w));
    return {Rule::Step7, std::move(out)};
}

} // namespace detail

/// The first applicable rule among RR1, RR2 and Steps 1-8 on a nonempty
/// kernelized graph, with its branches.
inline Expansion expand(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("expand on an empty graph");
    if (auto b = rr1(g)) return {Rule::RR1, {*b}};
    if (auto b = rr2(g)) return {Rule::RR2, {*b}};

    const auto verts = g.live_vertices();
    for (Vertex v : verts) {
        if (g.degree(v) < 3) continue;
        for (Vertex u : g.neighbors(v))
            if (dominates(g, v, u)) return {Rule::Step1, branch_b2(g, v, u)};
    }
    if (auto c = find_chain(g)) return detail::step2(g, *c);
    if (auto c = find_short_chain(g)) return detail::step3(g, *c);
    for (Vertex v : verts)
        if (g.degree(v) == 2) return {Rule::Step4, branch_b1(g, v)};
    for (Vertex v : verts)
        if (g.degree(v) > 4) return {Rule::Step5, branch_b1(g, v)};
    for (Vertex v : verts) {
        if (g.degree(v) != 3) continue;
        const auto n = g.neighbors(v);
        if (!g.has_edge(n[0], n[1]) && !g.has_edge(n[0], n[2]) && !g.has_edge(n[1], n[2]))
            return {Rule::Step6, branch_b1(g, v)};
    }
    for (Vertex v : verts) {
        if (g.degree(v) != 3) continue;
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) == 4) return detail::step7(g, v);
    }
    return {Rule::Step8, branch_b1(g, verts.front())};
}

namespace audit {

// Brute-force restatement of the rule preconditions, written independently
// of `expand`.

inline bool closed_subset(const Graph& g, Vertex u, Vertex v) {
    return is_subset(closed_neighborhood(g, VertexSet{u}), closed_neighborhood(g, VertexSet{v}));
}

inline bool walk_has_degrees(const Graph& g, const std::vector<Vertex>& walk) {
    for (std::size_t i = 1; i + 1 < walk.size(); ++i)
        if (g.degree(walk[i]) != 2) return false;
    return true;
}

// Simple paths of `len` vertices from each start, distinct except possibly last == first.
inline bool any_corridor(const Graph& g, std::size_t len, bool need_last_deg3) {
    for (Vertex s : g.live_vertices()) {
        if (g.degree(s) < 3) continue;
        std::vector<std::vector<Vertex>> walks{{s}};
        for (std::size_t step = 1; step < len; ++step) {
            std::vector<std::vector<Vertex>> next;
            for (const auto& w : walks)
                for (Vertex x : g.neighbors(w.back())) {
                    bool repeat = std::find(w.begin(), w.end(), x) != w.end();
                    if (repeat && !(step == len - 1 && x == s)) continue;
                    auto ext = w;
                    ext.push_back(x);
                    next.push_back(std::move(ext));
                }
            walks = std::move(next);
        }
        for (const auto& w : walks) {
            if (!walk_has_degrees(g, w)) continue;
            if (need_last_deg3 && g.degree(w.back()) < 3) continue;
            return true;
        }
    }
    return false;
}

inline std::optional<Rule> first_applicable(const Graph& g) {
    if (g.empty()) return std::nullopt;
    for (const auto& comp : connected_components(g)) {
        std::size_t deg2 = 0;
        for (Vertex v : comp) deg2 += g.degree(v) == 2 ? 1 : 0;
        if (deg2 == comp.size()) return Rule::RR1;
    }
    for (const auto& [a, b] : g.edges())
        if ((g.degree(a) == 1 && g.degree(b) == 2) || (g.degree(b) == 1 && g.degree(a) == 2)) return Rule::RR2;
    for (const auto& [a, b] : g.edges())
        if ((g.degree(a) >= 3 && closed_subset(g, b, a)) || (g.degree(b) >= 3 && closed_subset(g, a, b)))
            return Rule::Step1;
    if (any_corridor(g, 5, false)) return Rule::Step2;
    if (any_corridor(g, 4, true)) return Rule::Step3;
    std::size_t deg3 = 0, deg4 = 0;
    for (Vertex v : g.live_vertices()) {
        const auto d = g.degree(v);
        if (d == 2) return Rule::Step4;
        if (d < 2) throw InternalError("vertex of degree < 2 survived to the branching steps");
        deg3 += d == 3 ? 1 : 0;
        deg4 += d == 4 ? 1 : 0;
    }
    for (Vertex v : g.live_vertices())
        if (g.degree(v) >= 5) return Rule::Step5;
    for (Vertex v : g.live_vertices()) {
        if (g.degree(v) != 3) continue;
        std::size_t inner = 0;
        for (const auto& [a, b] : induced_subgraph(g, open_neighborhood(g, VertexSet{v})).edges()) {
            (void)a;
            (void)b;
            ++inner;
        }
        if (inner == 0) return Rule::Step6;
    }
    for (const auto& [a, b] : g.edges())
        if (g.degree(a) + g.degree(b) == 7) return Rule::Step7;
    if (deg3 + deg4 != g.num_vertices()) throw InternalError("Step 8 reached on a graph that is not 3/4-regular");
    return Rule::Step8;
}

// The vertices removed but not charged must be whole matched edges of G - charged.
inline void check_branch(const Graph& g, const Branch& b) {
    if (!is_subset(b.charged, b.removed)) throw InternalError("charged vertices not removed");
    for (Vertex v : b.removed) g.require_live(v);
    const auto kept = set_difference(b.removed, b.charged);
    for (Vertex x : kept) {
        std::size_t partners = 0;
        for (Vertex y : g.neighbors(x)) {
            if (b.charged.contains(y)) continue;
            if (!kept.contains(y)) throw InternalError("kept vertex " + std::to_string(x) + " still sees the residual graph");
            ++partners;
        }
        if (partners != 1) throw InternalError("kept vertex " + std::to_string(x) + " is not in a matched edge");
    }
}

} // namespace audit

namespace detail {

class Search {
public:
    Search(const SolveOptions& opts, SearchStats& stats) : opts_(opts), stats_(stats) {}

    bool run(const Graph& g, std::int64_t k, std::size_t depth, std::size_t step8_seen) {
        ++stats_.nodes_total;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (k < 0) return leaf("no");

        ++stats_.kernel_calls;
        auto kr = reduce(Instance{g, k}, ReduceOptions{opts_.verify_crowns, nullptr});
        stats_.crowns_applied += kr.crowns_applied;
        stats_.crowns_verified += kr.crowns_verified;
        if (kr.is_no()) return leaf("no");

        const std::size_t mark = path_.size();
        auto& red = *kr.reduced;
        path_.insert(path_.end(), red.forced.begin(), red.forced.end());
        const Graph& rg = red.instance.graph;
        const std::int64_t rk = red.instance.k;
        if (rg.empty()) {
            witness_ = VertexSet(path_);
            return leaf("yes");
        }

        auto exp = expand(rg);
        if (opts_.audit) {
            ++stats_.audits;
            const auto expected = audit::first_applicable(rg);
            if (!expected || *expected != exp.rule)
                throw InternalError(std::string("precedence violated: dispatched ") + rule_label(exp.rule) +
                                    ", first applicable " + (expected ? rule_label(*expected) : "none"));
            for (const auto& b : exp.branches) audit::check_branch(rg, b);
        }
        ++stats_.nodes_per_step[rule_label(exp.rule)];
        const std::size_t step8_here = step8_seen + (exp.rule == Rule::Step8 ? 1 : 0);
        stats_.max_step8_on_path = std::max(stats_.max_step8_on_path, step8_here);

        for (const auto& b : exp.branches) {
            const auto child_k = rk - static_cast<std::int64_t>(b.spend());
            if (child_k < 0) continue;
            const std::size_t child_mark = path_.size();
            path_.insert(path_.end(), b.charged.begin(), b.charged.end());
            if (run(delete_vertices(rg, b.removed), child_k, depth + 1, step8_here)) return true;
            path_.resize(child_mark);
        }
        path_.resize(mark);
        return false;
    }

    const VertexSet& witness() const { return witness_; }

private:
    bool leaf(const char* label) {
        ++stats_.nodes_per_step[label];
        return label[0] == 'y';
    }

    const SolveOptions& opts_;
    SearchStats& stats_;
    std::vector<Vertex> path_;
    VertexSet witness_;
};

} // namespace detail

/// Decides whether at most k deletions turn G into an induced matching. On
/// YES the witness is checked against the original graph before returning.
inline SolveResult solve(const Instance& inst, const SolveOptions& opts = {}) {
    SolveResult result;
    detail::Search search(opts, result.stats);
    result.yes = search.run(inst.graph, inst.k, 0, 0);
    if (result.yes) {
        const auto& w = search.witness();
        if (static_cast<std::int64_t>(w.size()) > inst.k) throw InternalError("witness exceeds the budget");
        if (!is_aim_deletion_set(inst.graph, w)) throw InternalError("witness does not leave an induced matching");
        result.witness = w;
    }
    return result;
}

struct MinimumResult {
    std::size_t min_deletion = 0;
    VertexSet witness;
    std::vector<std::pair<std::int64_t, SolveResult>> runs; // every solve call, in order
};

/// Smallest k with a YES answer, by descending search: start from k = n and
/// retry with one less than the size of the last witness until NO.
inline MinimumResult minimum_deletion(const Graph& g, const SolveOptions& opts = {}) {
    MinimumResult out;
    out.witness = g.vertices();
    std::int64_t k = static_cast<std::int64_t>(g.num_vertices());
    for (;;) {
        auto r = solve(Instance{g, k}, opts);
        const bool yes = r.yes;
        if (yes) out.witness = *r.witness;
        out.runs.emplace_back(k, std::move(r));
        if (!yes) break;
        k = static_cast<std::int64_t>(out.witness.size()) - 1;
        if (k < 0) break;
    }
    out.min_deletion = out.witness.size();
    return out;
}

} // namespace aimkit
