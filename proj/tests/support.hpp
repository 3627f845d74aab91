#pragma once

#include <initializer_list>
#include <vector>

#include <aimkit/aimkit.hpp>

namespace aimkit::testing {

inline Graph path_graph(std::size_t n) { return named_graph("path_" + std::to_string(n)); }
inline Graph cycle_graph(std::size_t n) { return named_graph("cycle_" + std::to_string(n)); }
inline Graph complete_graph(std::size_t n) { return named_graph("complete_" + std::to_string(n)); }

inline Graph make(std::size_t n, std::initializer_list<Edge> edges) { return Graph::from_edges(n, edges); }

// Seeded mixed corpus of small graphs, used by the property tests.
inline std::vector<Graph> small_corpus(std::size_t count, std::uint64_t seed, std::size_t n_min, std::size_t n_max) {
    Rng rng(seed);
    const double ps[] = {0.1, 0.2, 0.3, 0.45};
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(n_min), static_cast<std::int64_t>(n_max)));
        const double p = ps[rng.below(4)];
        out.push_back(erdos_renyi(n, p, rng.next()));
    }
    return out;
}

// Circulant C_n(1,2) with each "i, i+1" edge dropped with probability `drop`.
// Degrees are 3 and 4 with many triangles: the regime of Steps 7 and 8.
inline Graph thinned_circulant(std::size_t n, double drop, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        if (!rng.bernoulli(drop)) edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, (i + 2) % n);
    }
    return Graph::from_edges(n, edges);
}

} // namespace aimkit::testing
