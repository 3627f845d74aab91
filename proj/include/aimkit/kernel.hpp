#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "crown.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "packing.hpp"

namespace aimkit {

/// A graph together with the remaining deletion budget.
struct Instance {
    Graph graph;
    std::int64_t k = 0;
};

struct ReducedInstance {
    Instance instance;
    VertexSet forced;             // vertices already committed to the deletion set
    std::vector<Edge> kept_edges; // 2-vertex components removed as solved
};

/// Output of `reduce`: either NO or an equivalent reduced instance.
struct KernelResult {
    std::optional<ReducedInstance> reduced;
    std::size_t crowns_applied = 0;
    std::size_t crowns_verified = 0;

    bool is_no() const { return !reduced.has_value(); }
};

struct ReduceOptions {
    // Run check_aim_crown / check_vc_crown on every crown and throw on failure.
    bool verify_crowns = false;
    std::ostream* trace = nullptr;
};

/// Q0-vertices none of whose neighbors lies outside a good 3-path.
inline std::size_t q0_count_only_good(const Graph& g, const PackingContext& ctx) {
    std::size_t count = 0;
    for (Vertex q : ctx.q0) {
        bool only_good = true;
        for (Vertex u : g.neighbors(q)) {
            const auto idx = ctx.path_index[u];
            if (idx < 0 || !ctx.paths[static_cast<std::size_t>(idx)].good) {
                only_good = false;
                break;
            }
        }
        count += only_good ? 1 : 0;
    }
    return count;
}

struct CrownSides {
    VertexSet a;
    VertexSet b;
};

/// A is the union of the Q1-edges whose two endpoints only see good 3-paths
/// inside P; B is the set of good-path vertices adjacent to A. Whole edges are
/// taken so that G[A] stays an induced matching.
inline CrownSides build_A_B(const Graph& g, const PackingContext& ctx) {
    auto sees_only_good = [&](Vertex q) {
        for (Vertex u : g.neighbors(q)) {
            const auto idx = ctx.path_index[u];
            if (idx >= 0 && !ctx.paths[static_cast<std::size_t>(idx)].good) return false;
        }
        return true;
    };
    std::vector<Vertex> a, b;
    for (Vertex q : ctx.q1) {
        const auto w = static_cast<Vertex>(ctx.q_partner[q]);
        if (q < w && sees_only_good(q) && sees_only_good(w)) {
            a.push_back(q);
            a.push_back(w);
        }
    }
    CrownSides sides;
    sides.a = VertexSet(std::move(a));
    for (Vertex q : sides.a)
        for (Vertex u : g.neighbors(q))
            if (ctx.path_index[u] >= 0) b.push_back(u);
    sides.b = VertexSet(std::move(b));
    return sides;
}

namespace detail {

inline void check_kernel_bound(const Graph& g, std::int64_t k, const PackingContext& ctx, std::size_t q0_good,
                               const CrownSides& sides) {
    VertexSet bad_block;
    for (const auto& info : ctx.paths)
        if (!info.good) bad_block.insert_all(info.v_of);
    const std::size_t x = ctx.bad_count, y = ctx.good_count;
    if (bad_block.size() > 6 * x) throw InternalError("bad 3-paths cover more than 6x vertices");
    if (sides.a.size() > 2 * y) throw InternalError("|A| exceeds 2y at the final step");
    const std::size_t accounted = bad_block.size() + 3 * y + q0_good + sides.a.size();
    if (accounted != g.num_vertices())
        throw InternalError("vertex accounting mismatch: " + std::to_string(accounted) + " vs " +
                            std::to_string(g.num_vertices()));
    if (static_cast<std::int64_t>(g.num_vertices()) > 6 * k)
        throw InternalError("reduced instance has " + std::to_string(g.num_vertices()) + " > 6k = " +
                            std::to_string(6 * k) + " vertices");
}

} // namespace detail

/// Shrinks (G, k) to an equivalent instance with at most 6k' vertices, or
/// proves it is a NO-instance. The reduced graph keeps the original ids; a
/// solution of the reduced instance plus `forced` solves the original.
inline KernelResult reduce(const Instance& inst, const ReduceOptions& opts = {}) {
    KernelResult result;
    Graph g = inst.graph;
    std::int64_t k = inst.k;
    VertexSet forced;
    std::vector<Edge> kept;
    std::ostream* trace = opts.trace;

    for (;;) {
        if (k < 0) {
            if (trace) *trace << "budget negative -> NO\n";
            return result;
        }

        std::vector<Vertex> singles;
        for (const auto& comp : connected_components(g)) {
            if (comp.size() == 2) {
                kept.emplace_back(comp.ids()[0], comp.ids()[1]);
                if (trace) *trace << "step1 drop edge " << comp.ids()[0] << ' ' << comp.ids()[1] << '\n';
                g.remove_vertices(comp);
            } else if (comp.size() == 1) {
                singles.push_back(comp.front());
                if (trace) *trace << "step2 delete isolated " << comp.front() << '\n';
            }
        }
        for (Vertex v : singles) {
            g.remove_vertex(v);
            forced.insert(v);
            --k;
        }
        if (k < 0) {
            if (trace) *trace << "budget negative -> NO\n";
            return result;
        }

        const Packing packing = make_proper(g, greedy_maximal_packing(g));
        if (trace) {
            *trace << "step4 proper packing of size " << packing.size() << '\n';
            write_packing(*trace, packing);
        }
        if (static_cast<std::int64_t>(packing.size()) > k) {
            if (trace) *trace << "step5 packing larger than k -> NO\n";
            return result;
        }

        const auto ctx = classify(g, packing);
        const auto x = static_cast<std::int64_t>(ctx.bad_count);
        const std::size_t q0_good = q0_count_only_good(g, ctx);
        if (static_cast<std::int64_t>(q0_good) > k - x) {
            if (trace) *trace << "step7 " << q0_good << " Q0-vertices see only good paths, k-x=" << k - x << " -> NO\n";
            return result;
        }

        const auto sides = build_A_B(g, ctx);
        if (sides.a.size() > 2 * sides.b.size()) {
            const auto crown = find_aim_crown(g, sides.a, sides.b);
            if (opts.verify_crowns) {
                if (!check_aim_crown(g, crown)) throw InternalError("AIM crown failed its checker");
                auto aux = build_auxiliary(g, sides.a, sides.b);
                std::vector<Vertex> left(aux.left_size());
                for (std::size_t i = 0; i < left.size(); ++i) left[i] = static_cast<Vertex>(i);
                if (!check_vc_crown(aux.graph, find_vc_crown(aux.graph, VertexSet(std::move(left)))))
                    throw InternalError("auxiliary VC crown failed its checker");
                ++result.crowns_verified;
            }
            if (crown.c.empty()) throw InternalError("empty crown");
            if (trace) {
                *trace << "step9 crown |A|=" << sides.a.size() << " |B|=" << sides.b.size() << '\n';
                write_crown(*trace, crown);
            }
            ++result.crowns_applied;
            forced.insert_all(crown.h);
            k -= static_cast<std::int64_t>(crown.h.size());
            g.remove_vertices(set_union(crown.c, crown.h));
            continue;
        }

        detail::check_kernel_bound(g, k, ctx, q0_good, sides);
        if (trace) *trace << "step10 n'=" << g.num_vertices() << " k'=" << k << '\n';
        result.reduced = ReducedInstance{Instance{std::move(g), k}, std::move(forced), std::move(kept)};
        return result;
    }
}

} // namespace aimkit
