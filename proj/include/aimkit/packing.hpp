#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace aimkit {

/// A 3-path u1 - u2 - u3; u2 is the middle vertex.
struct ThreePath {
    Vertex u1 = 0, u2 = 0, u3 = 0;

    std::array<Vertex, 3> vertices() const { return {u1, u2, u3}; }
    bool contains(Vertex v) const { return v == u1 || v == u2 || v == u3; }

    friend bool operator==(const ThreePath&, const ThreePath&) = default;
    friend auto operator<=>(const ThreePath&, const ThreePath&) = default;
};

inline bool is_three_path(const Graph& g, const ThreePath& p) {
    return p.u1 != p.u2 && p.u2 != p.u3 && p.u1 != p.u3 && g.has_edge(p.u1, p.u2) && g.has_edge(p.u2, p.u3);
}

/// Pairwise vertex-disjoint 3-paths.
struct Packing {
    std::vector<ThreePath> paths;

    std::size_t size() const { return paths.size(); }
    friend bool operator==(const Packing&, const Packing&) = default;
};

inline void write_packing(std::ostream& out, const Packing& p) {
    for (const auto& l : p.paths) out << "P " << l.u1 << ' ' << l.u2 << ' ' << l.u3 << '\n';
}

/// Per-path view of the remainder Q around a packed 3-path.
struct PathInfo {
    VertexSet q_of;           // Q-vertices of the G[Q] components adjacent to the path
    VertexSet v_of;           // q_of plus the path's own vertices
    std::size_t touching = 0; // path vertices with at least one Q-neighbor
    bool good = false;        // touching <= 1
};

/// Partition V = P ∪ Q induced by a maximal packing, plus good/bad labels.
struct PackingContext {
    VertexSet p_vertices;
    VertexSet q_vertices;
    VertexSet q0; // isolated in G[Q]
    VertexSet q1; // endpoints of the size-2 components of G[Q]
    std::vector<PathInfo> paths;
    std::size_t bad_count = 0;
    std::size_t good_count = 0;

    // Indexed by vertex id; -1 for Q-vertices and dead ids.
    std::vector<std::int32_t> path_index;
    // Indexed by vertex id; the other endpoint of a Q1-edge, or -1.
    std::vector<std::int64_t> q_partner;

    bool in_p(Vertex v) const { return path_index[v] >= 0; }
};

namespace detail {

inline void check_paths_disjoint(const Graph& g, const Packing& p, std::vector<std::int32_t>& path_index) {
    path_index.assign(g.capacity(), -1);
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
        const auto& l = p.paths[i];
        for (Vertex v : l.vertices())
            if (!g.is_live(v)) throw InternalError("packed vertex " + std::to_string(v) + " is not live");
        if (!is_three_path(g, l)) throw InternalError("packing entry " + std::to_string(i) + " is not a 3-path");
        for (Vertex v : l.vertices()) {
            if (path_index[v] >= 0) throw InternalError("packing paths overlap at " + std::to_string(v));
            path_index[v] = static_cast<std::int32_t>(i);
        }
    }
}

// Lexicographically smallest 3-path starting at u1 inside the unused vertices.
inline std::optional<ThreePath> first_path_from(const Graph& g, Vertex u1, const std::vector<char>& used) {
    for (Vertex u2 : g.neighbors(u1)) {
        if (used[u2]) continue;
        for (Vertex u3 : g.neighbors(u2))
            if (!used[u3] && u3 != u1) return ThreePath{u1, u2, u3};
    }
    return std::nullopt;
}

// All 3-paths of G[within], each reported once with u1 < u3, in lexicographic order.
inline std::vector<ThreePath> three_paths_within(const Graph& g, const VertexSet& within) {
    std::vector<ThreePath> out;
    for (Vertex mid : within) {
        std::vector<Vertex> ends;
        for (Vertex w : g.neighbors(mid))
            if (within.contains(w)) ends.push_back(w);
        for (std::size_t a = 0; a < ends.size(); ++a)
            for (std::size_t b = a + 1; b < ends.size(); ++b) out.push_back({ends[a], mid, ends[b]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Adds 3-paths greedily from the unused vertices until none remains,
/// scanning start vertices in id order.
inline Packing extend_to_maximal(const Graph& g, Packing p) {
    std::vector<std::int32_t> index;
    detail::check_paths_disjoint(g, p, index);
    std::vector<char> used(g.capacity(), 0);
    for (std::size_t v = 0; v < index.size(); ++v) used[v] = index[v] >= 0;
    // A start vertex that finds no path now never will: the unused set only shrinks.
    for (Vertex u1 : g.live_vertices()) {
        if (used[u1]) continue;
        if (auto path = detail::first_path_from(g, u1, used)) {
            for (Vertex v : path->vertices()) used[v] = 1;
            p.paths.push_back(*path);
        }
    }
    return p;
}

inline Packing greedy_maximal_packing(const Graph& g) { return extend_to_maximal(g, Packing{}); }

/// Builds P, Q, Q0, Q1 and the per-path data. Throws InternalError if the
/// packing is not a maximal P3-packing of g.
inline PackingContext classify(const Graph& g, const Packing& p) {
    PackingContext ctx;
    detail::check_paths_disjoint(g, p, ctx.path_index);
    ctx.q_partner.assign(g.capacity(), -1);

    std::vector<Vertex> pv, qv, q0, q1;
    for (Vertex v : g.live_vertices()) {
        if (ctx.path_index[v] >= 0) {
            pv.push_back(v);
            continue;
        }
        qv.push_back(v);
        std::size_t q_deg = 0;
        for (Vertex u : g.neighbors(v))
            if (ctx.path_index[u] < 0) {
                ++q_deg;
                ctx.q_partner[v] = u;
            }
        if (q_deg > 1) throw InternalError("packing is not maximal: a 3-path survives around " + std::to_string(v));
        (q_deg == 0 ? q0 : q1).push_back(v);
    }
    ctx.p_vertices = VertexSet(std::move(pv));
    ctx.q_vertices = VertexSet(std::move(qv));
    ctx.q0 = VertexSet(std::move(q0));
    ctx.q1 = VertexSet(std::move(q1));

    ctx.paths.resize(p.paths.size());
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
        auto& info = ctx.paths[i];
        std::vector<Vertex> q_of;
        for (Vertex x : p.paths[i].vertices()) {
            bool touches = false;
            for (Vertex q : g.neighbors(x)) {
                if (ctx.path_index[q] >= 0) continue;
                touches = true;
                q_of.push_back(q);
                if (ctx.q_partner[q] >= 0) q_of.push_back(static_cast<Vertex>(ctx.q_partner[q]));
            }
            info.touching += touches ? 1 : 0;
        }
        info.q_of = VertexSet(std::move(q_of));
        auto own = p.paths[i].vertices();
        info.v_of = set_union(info.q_of, VertexSet(own.begin(), own.end()));
        info.good = info.touching <= 1;
        (info.good ? ctx.good_count : ctx.bad_count) += 1;
    }
    return ctx;
}

/// Two vertex-disjoint 3-paths inside G[V_i], if any.
inline std::optional<std::pair<ThreePath, ThreePath>> find_disjoint_pair(const Graph& g, const VertexSet& v_i) {
    auto all = detail::three_paths_within(g, v_i);
    std::vector<char> blocked(g.capacity(), 0);
    for (const auto& first : all) {
        for (Vertex v : first.vertices()) blocked[v] = 1;
        // G[V_i minus the first path] has a 3-path iff some vertex keeps two neighbors there.
        std::optional<ThreePath> second;
        for (Vertex mid : v_i) {
            if (blocked[mid]) continue;
            Vertex ends[2];
            int found = 0;
            for (Vertex w : g.neighbors(mid)) {
                if (blocked[w] || !v_i.contains(w)) continue;
                ends[found++] = w;
                if (found == 2) break;
            }
            if (found == 2) {
                second = ThreePath{ends[0], mid, ends[1]};
                break;
            }
        }
        for (Vertex v : first.vertices()) blocked[v] = 0;
        if (second) return std::make_pair(first, *second);
    }
    return std::nullopt;
}

/// Rule 1: replace some L_i by two disjoint 3-paths of G[V_i], then re-extend
/// to maximality. Empty if no packed path admits this.
inline std::optional<Packing> apply_rule1(const Graph& g, const Packing& p) {
    auto ctx = classify(g, p);
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
        if (ctx.paths[i].v_of.size() < 6) continue;
        if (auto pair = find_disjoint_pair(g, ctx.paths[i].v_of)) {
            Packing next = p;
            next.paths[i] = pair->first;
            next.paths.insert(next.paths.begin() + static_cast<std::ptrdiff_t>(i) + 1, pair->second);
            return extend_to_maximal(g, std::move(next));
        }
    }
    return std::nullopt;
}

/// Whether `candidate` would be a good path once it replaces path `i`.
inline bool good_after_swap(const Graph& g, const PackingContext& ctx, std::size_t i, const ThreePath& candidate) {
    std::size_t touching = 0;
    for (Vertex x : candidate.vertices()) {
        for (Vertex y : g.neighbors(x)) {
            if (candidate.contains(y)) continue;
            const auto owner = ctx.path_index[y];
            if (owner < 0 || static_cast<std::size_t>(owner) == i) {
                ++touching;
                break;
            }
        }
    }
    return touching <= 1;
}

/// A 3-path of G[V_i] that is good after it replaces the bad path L_i.
/// Searches every 3-path of G[V_i] in lexicographic order.
inline ThreePath find_quasi_good(const Graph& g, const Packing& p, std::size_t i) {
    if (i >= p.paths.size()) throw std::invalid_argument("path index out of range");
    auto ctx = classify(g, p);
    const auto& info = ctx.paths[i];
    if (info.good) throw std::invalid_argument("path " + std::to_string(i) + " is already good");
    if (info.v_of.size() < 7) throw std::invalid_argument("path " + std::to_string(i) + " has |V_i| < 7");
    for (const auto& candidate : detail::three_paths_within(g, info.v_of))
        if (good_after_swap(g, ctx, i, candidate)) return candidate;
    throw InternalError("no quasi-good 3-path inside V_" + std::to_string(i));
}

inline std::size_t count_big_bad(const PackingContext& ctx) {
    std::size_t n = 0;
    for (const auto& info : ctx.paths)
        if (!info.good && info.v_of.size() >= 7) ++n;
    return n;
}

/// Applies Rules 1 and 2 until every bad path has |V_i| <= 6.
///
/// Rule 1 strictly grows the packing and nothing shrinks it, so |P| <= n/3
/// bounds the Rule 1 rounds. A Rule 2 swap can turn a neighboring good path
/// bad, so there is no monotone count within a fixed |P|; instead every
/// packing seen at the current size is remembered and a repeat (a cycle that
/// would never end) raises InternalError, as does the round guard.
inline Packing make_proper(const Graph& g, Packing p) {
    p = extend_to_maximal(g, std::move(p));
    const std::size_t guard = g.num_vertices() * g.num_vertices() + 16;
    std::set<std::vector<ThreePath>> seen;
    auto canonical = [](const Packing& q) {
        auto paths = q.paths;
        std::sort(paths.begin(), paths.end());
        return paths;
    };
    for (std::size_t round = 0;; ++round) {
        if (round > guard) throw InternalError("make_proper exceeded its iteration guard");
        if (auto grown = apply_rule1(g, p)) {
            if (grown->size() <= p.size()) throw InternalError("Rule 1 did not grow the packing");
            p = std::move(*grown);
            seen.clear();
            continue;
        }
        auto ctx = classify(g, p);
        if (count_big_bad(ctx) == 0) return p;
        if (!seen.insert(canonical(p)).second) throw InternalError("Rules 1 and 2 cycle without reaching a proper packing");

        std::size_t i = 0;
        while (ctx.paths[i].good || ctx.paths[i].v_of.size() < 7) ++i;
        Packing next = p;
        next.paths[i] = find_quasi_good(g, p, i);
        next = extend_to_maximal(g, std::move(next));
        if (next.size() > p.size()) seen.clear();
        p = std::move(next);
    }
}

/// Checks 3-path validity, disjointness, maximality and optionally properness.
inline bool validate_packing(const Graph& g, const Packing& p, bool require_proper) {
    try {
        auto ctx = classify(g, p);
        if (!require_proper) return true;
        for (const auto& info : ctx.paths)
            if (!info.good && info.v_of.size() > 6) return false;
        return true;
    } catch (const InternalError&) {
        return false;
    }
}

} // namespace aimkit
