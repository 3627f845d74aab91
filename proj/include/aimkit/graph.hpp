#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aimkit {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids. Iteration is id-ascending.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
    explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }

    template <typename It>
    VertexSet(It first, It last) : ids_(first, last) { normalize(); }

    bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

    void insert(Vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }

    void erase(Vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) ids_.erase(it);
    }

    void insert_all(const VertexSet& other) {
        std::vector<Vertex> merged;
        merged.reserve(ids_.size() + other.ids_.size());
        std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                       std::back_inserter(merged));
        ids_ = std::move(merged);
    }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    Vertex front() const { return ids_.front(); }
    const std::vector<Vertex>& ids() const { return ids_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<Vertex> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out = a;
    out.insert_all(b);
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Undirected simple graph over stable vertex ids in [0, capacity()).
///
/// Deleting a vertex marks its id dead and never renumbers the survivors, so
/// ids handed out by one graph stay meaningful in every subgraph derived from it.
/// Adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;

    /// n isolated vertices 0..n-1.
    explicit Graph(std::size_t n) : adj_(n), live_(n, 1), num_live_(n) {}

    /// Simple graph on ids [0, n). Duplicate pairs collapse to one edge.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                            ") references an id outside [0, " + std::to_string(n) + ")");
            if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        std::size_t deg_sum = 0;
        for (auto& list : g.adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            deg_sum += list.size();
        }
        g.num_edges_ = deg_sum / 2;
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t capacity() const { return adj_.size(); }
    std::size_t num_vertices() const { return num_live_; }
    std::size_t num_edges() const { return num_edges_; }
    bool empty() const { return num_live_ == 0; }

    bool is_live(Vertex v) const { return v < live_.size() && live_[v] != 0; }

    std::span<const Vertex> neighbors(Vertex v) const {
        require_live(v);
        return adj_[v];
    }

    std::size_t degree(Vertex v) const {
        require_live(v);
        return adj_[v].size();
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (!is_live(u) || !is_live(v)) return false;
        const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(list.begin(), list.end(), other);
    }

    /// Live ids in ascending order.
    std::vector<Vertex> live_vertices() const {
        std::vector<Vertex> out;
        out.reserve(num_live_);
        for (Vertex v = 0; v < live_.size(); ++v)
            if (live_[v]) out.push_back(v);
        return out;
    }

    VertexSet vertices() const { return VertexSet(live_vertices()); }

    /// Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(num_edges_);
        for (Vertex u = 0; u < adj_.size(); ++u) {
            if (!live_[u]) continue;
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        }
        return out;
    }

    void remove_vertex(Vertex v) {
        require_live(v);
        for (Vertex u : adj_[v]) {
            auto& list = adj_[u];
            list.erase(std::lower_bound(list.begin(), list.end(), v));
        }
        num_edges_ -= adj_[v].size();
        adj_[v].clear();
        live_[v] = 0;
        --num_live_;
    }

    void remove_vertices(const VertexSet& xs) {
        for (Vertex v : xs) require_live(v);
        for (Vertex v : xs) remove_vertex(v);
    }

    void require_live(Vertex v) const {
        if (!is_live(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> live_;
    std::size_t num_live_ = 0;
    std::size_t num_edges_ = 0;
};

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

/// N(X): neighbors of X outside X.
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& xs) {
    std::vector<Vertex> out;
    for (Vertex v : xs)
        for (Vertex u : g.neighbors(v))
            if (!xs.contains(u)) out.push_back(u);
    return VertexSet(std::move(out));
}

/// N[X] = N(X) ∪ X.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& xs) {
    return set_union(open_neighborhood(g, xs), xs);
}

/// G \ X.
inline Graph delete_vertices(const Graph& g, const VertexSet& xs) {
    Graph out = g;
    out.remove_vertices(xs);
    return out;
}

/// Components as sorted sets, ordered by their minimum id.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.capacity(), 0);
    std::vector<Vertex> stack;
    for (Vertex s : g.live_vertices()) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

/// Every vertex has degree exactly one, i.e. every component is a single edge.
inline bool is_induced_matching(const Graph& g) {
    for (Vertex v : g.live_vertices())
        if (g.degree(v) != 1) return false;
    return true;
}

inline bool is_aim_deletion_set(const Graph& g, const VertexSet& s) {
    return is_induced_matching(delete_vertices(g, s));
}

/// Adjacency symmetry and liveness of every neighbor id.
inline bool is_well_formed(const Graph& g) {
    std::size_t deg_sum = 0;
    for (Vertex v : g.live_vertices()) {
        auto nbrs = g.neighbors(v);
        if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
        for (Vertex u : nbrs) {
            if (u == v || !g.is_live(u)) return false;
            auto back = g.neighbors(u);
            if (!std::binary_search(back.begin(), back.end(), v)) return false;
        }
        deg_sum += nbrs.size();
    }
    return deg_sum == 2 * g.num_edges();
}

/// G[X] with ids preserved.
inline Graph induced_subgraph(const Graph& g, const VertexSet& xs) {
    Graph out = g;
    std::vector<Vertex> drop;
    for (Vertex v : g.live_vertices())
        if (!xs.contains(v)) drop.push_back(v);
    out.remove_vertices(VertexSet(std::move(drop)));
    return out;
}

} // namespace aimkit
