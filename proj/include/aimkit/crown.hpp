#pragma once

#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace aimkit {

/// Crown for vertex cover: C independent, no C-R edge, H matched into C.
struct VcCrown {
    VertexSet c, h, r;
    std::map<Vertex, Vertex> matching; // h -> c
};

/// Crown for almost induced matching: G[C] an induced matching, no C-R edge,
/// each H-vertex assigned its own edge of G[C] that it touches.
struct AimCrown {
    VertexSet c, h, r;
    std::map<Vertex, Edge> matching; // h -> edge of G[C], stored with first < second
};

/// Bipartite graph with one left node per edge of G[A] and one right node per
/// B-vertex. In `graph`, left node i has id i and right node j has id
/// left_edges.size() + j.
struct AuxiliaryBipartite {
    std::vector<Edge> left_edges;
    std::vector<Vertex> right;
    Graph graph;

    std::size_t left_size() const { return left_edges.size(); }
};

namespace detail {

// Augmenting-path maximum matching between `left` and the vertices adjacent
// to it. Returns partner-by-id (or -1) for every vertex.
inline std::vector<std::int64_t> bipartite_max_matching(const Graph& g, const VertexSet& left) {
    std::vector<std::int64_t> mate(g.capacity(), -1);
    std::vector<char> visited(g.capacity(), 0);

    auto augment = [&](auto&& self, Vertex x) -> bool {
        for (Vertex y : g.neighbors(x)) {
            if (visited[y]) continue;
            visited[y] = 1;
            if (mate[y] < 0 || self(self, static_cast<Vertex>(mate[y]))) {
                mate[y] = x;
                mate[x] = y;
                return true;
            }
        }
        return false;
    };

    for (Vertex x : left) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(augment, x);
    }
    return mate;
}

inline void check_partition(const Graph& g, const VertexSet& c, const VertexSet& h, const VertexSet& r,
                            bool& ok) {
    if (!set_intersection(c, h).empty() || !set_intersection(c, r).empty() || !set_intersection(h, r).empty())
        ok = false;
    if (set_union(set_union(c, h), r) != g.vertices()) ok = false;
}

inline bool no_c_r_edge(const Graph& g, const VertexSet& c, const VertexSet& r) {
    for (Vertex v : c)
        for (Vertex u : g.neighbors(v))
            if (r.contains(u)) return false;
    return true;
}

} // namespace detail

/// Crown with C ⊆ I and H ⊆ N(I) for an independent set I with |I| > |N(I)|.
///
/// Takes a maximum matching between I and N(I); C is every I-vertex reachable
/// by an alternating path from an unmatched I-vertex, and H = N(C).
inline VcCrown find_vc_crown(const Graph& g, const VertexSet& i_set) {
    for (Vertex v : i_set) {
        g.require_live(v);
        for (Vertex u : g.neighbors(v))
            if (i_set.contains(u)) throw std::invalid_argument("i_set is not independent");
    }
    const VertexSet n_i = open_neighborhood(g, i_set);
    if (i_set.size() <= n_i.size()) throw std::invalid_argument("crown needs |I| > |N(I)|");

    const auto mate = detail::bipartite_max_matching(g, i_set);
    std::vector<char> reached(g.capacity(), 0);
    std::vector<Vertex> queue;
    for (Vertex x : i_set)
        if (mate[x] < 0) {
            reached[x] = 1;
            queue.push_back(x);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex y : g.neighbors(queue[head])) {
            if (reached[y]) continue;
            if (mate[y] < 0) throw InternalError("augmenting path left after maximum matching");
            reached[y] = 1;
            const auto x = static_cast<Vertex>(mate[y]);
            if (!reached[x]) {
                reached[x] = 1;
                queue.push_back(x);
            }
        }
    }

    VcCrown crown;
    std::vector<Vertex> c, h, r;
    for (Vertex v : g.live_vertices()) {
        if (!reached[v])
            r.push_back(v);
        else if (i_set.contains(v))
            c.push_back(v);
        else {
            h.push_back(v);
            crown.matching.emplace(v, static_cast<Vertex>(mate[v]));
        }
    }
    crown.c = VertexSet(std::move(c));
    crown.h = VertexSet(std::move(h));
    crown.r = VertexSet(std::move(r));
    return crown;
}

inline bool check_vc_crown(const Graph& g, const VcCrown& crown) {
    bool ok = true;
    detail::check_partition(g, crown.c, crown.h, crown.r, ok);
    if (!ok) return false;
    if (!detail::no_c_r_edge(g, crown.c, crown.r)) return false;
    for (Vertex v : crown.c)
        for (Vertex u : g.neighbors(v))
            if (crown.c.contains(u)) return false;
    if (crown.matching.size() != crown.h.size()) return false;
    std::set<Vertex> images;
    for (auto [x, y] : crown.matching) {
        if (!crown.h.contains(x) || !crown.c.contains(y) || !g.has_edge(x, y)) return false;
        if (!images.insert(y).second) return false;
    }
    return true;
}

/// Preconditions: A and B disjoint, G[A] an induced matching, and no A-vertex
/// adjacent to anything outside A ∪ B.
inline AuxiliaryBipartite build_auxiliary(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (!set_intersection(a, b).empty()) throw std::invalid_argument("A and B must be disjoint");
    for (Vertex v : b) g.require_live(v);
    AuxiliaryBipartite aux;
    std::vector<std::int64_t> left_of(g.capacity(), -1);
    for (Vertex v : a) {
        g.require_live(v);
        std::int64_t partner = -1;
        std::size_t inside = 0;
        for (Vertex u : g.neighbors(v)) {
            if (a.contains(u)) {
                ++inside;
                partner = u;
            } else if (!b.contains(u)) {
                throw std::invalid_argument("A-vertex " + std::to_string(v) + " has a neighbor outside A and B");
            }
        }
        if (inside != 1)
            throw std::invalid_argument("G[A] is not an induced matching at vertex " + std::to_string(v));
        if (static_cast<Vertex>(partner) > v) {
            left_of[v] = left_of[partner] = static_cast<std::int64_t>(aux.left_edges.size());
            aux.left_edges.emplace_back(v, static_cast<Vertex>(partner));
        }
    }
    aux.right.assign(b.begin(), b.end());

    const std::size_t left = aux.left_edges.size();
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < aux.right.size(); ++j) {
        std::set<std::int64_t> touching;
        for (Vertex u : g.neighbors(aux.right[j]))
            if (left_of[u] >= 0) touching.insert(left_of[u]);
        for (auto i : touching) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(left + j));
    }
    aux.graph = Graph::from_edges(left + aux.right.size(), edges);
    return aux;
}

/// AIM crown with C ⊆ A and H ⊆ B, lifted from a vertex cover crown of the
/// auxiliary bipartite graph. Requires |A| > 2|B|.
inline AimCrown find_aim_crown(const Graph& g, const VertexSet& a, const VertexSet& b) {
    auto aux = build_auxiliary(g, a, b);
    if (a.size() <= 2 * b.size()) throw std::invalid_argument("AIM crown needs |A| > 2|B|");
    std::vector<Vertex> left_ids(aux.left_size());
    for (std::size_t i = 0; i < left_ids.size(); ++i) left_ids[i] = static_cast<Vertex>(i);
    const auto vc = find_vc_crown(aux.graph, VertexSet(std::move(left_ids)));

    AimCrown crown;
    std::vector<Vertex> c, h;
    for (Vertex i : vc.c) {
        c.push_back(aux.left_edges[i].first);
        c.push_back(aux.left_edges[i].second);
    }
    const std::size_t left = aux.left_size();
    for (Vertex j : vc.h) {
        const Vertex hv = aux.right[j - left];
        h.push_back(hv);
        crown.matching.emplace(hv, aux.left_edges[vc.matching.at(j)]);
    }
    crown.c = VertexSet(std::move(c));
    crown.h = VertexSet(std::move(h));
    crown.r = set_difference(g.vertices(), set_union(crown.c, crown.h));
    return crown;
}

inline bool check_aim_crown(const Graph& g, const AimCrown& crown) {
    bool ok = true;
    detail::check_partition(g, crown.c, crown.h, crown.r, ok);
    if (!ok) return false;
    if (!detail::no_c_r_edge(g, crown.c, crown.r)) return false;
    for (Vertex v : crown.c) {
        std::size_t inside = 0;
        for (Vertex u : g.neighbors(v)) inside += crown.c.contains(u) ? 1 : 0;
        if (inside != 1) return false;
    }
    if (crown.matching.size() != crown.h.size()) return false;
    std::set<Edge> images;
    for (const auto& [x, e] : crown.matching) {
        auto [u, v] = e;
        if (u > v) std::swap(u, v);
        if (!crown.h.contains(x)) return false;
        if (!crown.c.contains(u) || !crown.c.contains(v) || !g.has_edge(u, v)) return false;
        if (!g.has_edge(x, u) && !g.has_edge(x, v)) return false;
        if (!images.insert({u, v}).second) return false;
    }
    return true;
}

template <typename Crown>
void write_crown(std::ostream& out, const Crown& crown) {
    out << "C:";
    for (Vertex v : crown.c) out << ' ' << v;
    out << " / H:";
    for (Vertex v : crown.h) out << ' ' << v;
    out << '\n';
}

} // namespace aimkit
