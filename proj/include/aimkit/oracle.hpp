#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace aimkit {

// Exhaustive ground truth for small graphs. Deliberately simple: it shares no
// code with the kernel or the solver beyond the Graph type.

constexpr std::size_t kDefaultOracleMaxN = 24;

/// Size guard, overridable through AIMKIT_ORACLE_MAX_N (capped at 64).
inline std::size_t oracle_max_n() {
    if (const char* env = std::getenv("AIMKIT_ORACLE_MAX_N")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v > 64 ? 64 : static_cast<std::size_t>(v);
    }
    return kDefaultOracleMaxN;
}

struct InducedMatching {
    std::size_t size = 0;
    std::vector<Edge> edges;
};

struct OracleResult {
    std::size_t mim_edges = 0;
    std::size_t min_deletion = 0;
    VertexSet witness;
};

namespace detail {

struct OracleSearch {
    std::vector<Vertex> ids;               // dense index -> vertex id
    std::vector<std::uint64_t> closed;     // dense index -> N[v] as a mask
    std::vector<std::pair<int, int>> edges; // dense, lexicographic
    std::uint64_t all = 0;

    std::size_t best = 0;
    std::uint64_t best_cover = 0; // V(M) of the incumbent
    std::vector<int> chosen, best_edges;

    // Lexicographically smaller witness (V \ V(M)) for equal-size matchings.
    bool better_witness(std::uint64_t cover) const {
        const std::uint64_t diff = cover ^ best_cover;
        if (diff == 0) return false;
        const std::uint64_t low = diff & (~diff + 1);
        return (best_cover & low) != 0; // that vertex is deleted by the candidate only
    }

    std::size_t bound(std::uint64_t avail) const {
        std::size_t open = 0;
        for (std::uint64_t m = avail; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if ((closed[v] & avail & ~(std::uint64_t{1} << v)) != 0) ++open;
        }
        return open / 2;
    }

    void run(std::size_t next, std::uint64_t avail, std::uint64_t cover) {
        const std::size_t have = chosen.size();
        if (have > best || (have == best && better_witness(cover))) {
            best = have;
            best_cover = cover;
            best_edges = chosen;
        }
        if (have + bound(avail) < best) return;
        for (std::size_t i = next; i < edges.size(); ++i) {
            const auto [u, v] = edges[i];
            const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if ((avail & pair) != pair) continue;
            chosen.push_back(static_cast<int>(i));
            run(i + 1, avail & ~(closed[u] | closed[v]), cover | pair);
            chosen.pop_back();
        }
    }
};

inline detail::OracleSearch make_search(const Graph& g) {
    const std::size_t limit = oracle_max_n();
    if (g.num_vertices() > limit)
        throw std::invalid_argument("oracle limited to " + std::to_string(limit) + " vertices, graph has " +
                                    std::to_string(g.num_vertices()));
    detail::OracleSearch s;
    s.ids = g.live_vertices();
    std::vector<int> dense(g.capacity(), -1);
    for (std::size_t i = 0; i < s.ids.size(); ++i) dense[s.ids[i]] = static_cast<int>(i);
    s.closed.assign(s.ids.size(), 0);
    for (std::size_t i = 0; i < s.ids.size(); ++i) {
        s.closed[i] |= std::uint64_t{1} << i;
        for (Vertex u : g.neighbors(s.ids[i])) s.closed[i] |= std::uint64_t{1} << dense[u];
    }
    for (auto [u, v] : g.edges()) s.edges.emplace_back(dense[u], dense[v]);
    s.all = s.ids.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.ids.size()) - 1;
    s.best_cover = 0;
    return s;
}

} // namespace detail

/// Maximum induced matching by exhaustive search over edge subsets; ties are
/// broken towards the lexicographically smallest complement.
inline InducedMatching max_induced_matching_bruteforce(const Graph& g) {
    auto s = detail::make_search(g);
    s.run(0, s.all, 0);
    InducedMatching out;
    out.size = s.best;
    for (int i : s.best_edges) {
        const auto [u, v] = s.edges[static_cast<std::size_t>(i)];
        out.edges.emplace_back(s.ids[u], s.ids[v]);
    }
    return out;
}

/// Minimum AIM-deletion set: everything outside a maximum induced matching.
inline OracleResult min_aim_deletion(const Graph& g) {
    const auto mim = max_induced_matching_bruteforce(g);
    VertexSet kept;
    for (auto [u, v] : mim.edges) {
        kept.insert(u);
        kept.insert(v);
    }
    OracleResult r;
    r.mim_edges = mim.size;
    r.witness = set_difference(g.vertices(), kept);
    r.min_deletion = r.witness.size();
    if (r.min_deletion != g.num_vertices() - 2 * r.mim_edges) throw InternalError("oracle identity n - 2 MIM broken");
    if (!is_aim_deletion_set(g, r.witness)) throw InternalError("oracle witness is not an AIM-deletion set");
    return r;
}

inline bool decide(const Graph& g, std::int64_t k) {
    if (k < 0) return false;
    return static_cast<std::int64_t>(min_aim_deletion(g).min_deletion) <= k;
}

} // namespace aimkit
