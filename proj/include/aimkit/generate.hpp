#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace aimkit {

/// Seeded randomness with a fully specified output sequence.
///
/// The engine is std::mt19937_64, whose output is fixed by the C++ standard.
/// Standard distributions are not (their algorithms vary between library
/// implementations), so the derived draws are done here:
///   uniform01()    top 53 bits of one engine output, times 2^-53
///   below(bound)   rejection sampling on the top bits, no modulo bias
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below(0)");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            const std::uint64_t x = next();
            if (x < limit) return x % bound;
        }
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

enum class GenKind { ErdosRenyi, Planted, Named };

struct GenSpec {
    GenKind kind = GenKind::ErdosRenyi;
    std::size_t n = 0;       // erdos_renyi: vertex count
    double p = 0.0;          // erdos_renyi: edge probability; planted: wiring probability of extra vertices
    std::size_t matching = 0; // planted: edges of the hidden induced matching
    std::size_t extra = 0;    // planted: extra vertices (the planted deletion set)
    std::string name;         // named: path_<n>, cycle_<n>, complete_<n>, petersen
    std::uint64_t seed = 0;
};

inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// An induced matching on 2*matching vertices plus `extra` vertices, each
/// joined to every other vertex independently with probability p (and to at
/// least one vertex). Labels are shuffled. Deleting the extra vertices leaves
/// the matching, so the minimum deletion is at most `extra`.
inline Graph planted(std::size_t matching, std::size_t extra, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    const std::size_t n = 2 * matching + extra;
    if (n < 2 && extra > 0) throw std::invalid_argument("planted graph needs at least two vertices");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < matching; ++i)
        edges.emplace_back(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
    for (std::size_t x = 2 * matching; x < n; ++x) {
        bool wired = false;
        for (std::size_t y = 0; y < n; ++y) {
            // extra-extra pairs are drawn once, by the smaller extra vertex
            if (y == x || (y >= 2 * matching && y < x)) continue;
            if (rng.bernoulli(p)) {
                edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
                wired = true;
            }
        }
        if (!wired) {
            auto y = static_cast<Vertex>(rng.below(n - 1));
            if (y >= x) ++y;
            edges.emplace_back(static_cast<Vertex>(x), y);
        }
    }
    std::vector<Vertex> label(n);
    for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<Vertex>(i);
    rng.shuffle(label);
    for (auto& [u, v] : edges) {
        u = label[u];
        v = label[v];
    }
    return Graph::from_edges(n, edges);
}

inline Graph named_graph(const std::string& name) {
    auto size_after = [&](const std::string& prefix) -> std::size_t {
        const std::string digits = name.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad size in graph name '" + name + "'");
        return std::stoul(digits);
    };
    std::vector<Edge> edges;
    if (name == "petersen") {
        for (Vertex i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph::from_edges(10, edges);
    }
    if (name.rfind("path_", 0) == 0) {
        const auto n = size_after("path_");
        for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return Graph::from_edges(n, edges);
    }
    if (name.rfind("cycle_", 0) == 0) {
        const auto n = size_after("cycle_");
        if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
        return Graph::from_edges(n, edges);
    }
    if (name.rfind("complete_", 0) == 0) {
        const auto n = size_after("complete_");
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
    throw std::invalid_argument("unknown named graph '" + name + "'");
}

inline Graph gen(const GenSpec& spec) {
    switch (spec.kind) {
    case GenKind::ErdosRenyi:
        return erdos_renyi(spec.n, spec.p, spec.seed);
    case GenKind::Planted:
        return planted(spec.matching, spec.extra, spec.p, spec.seed);
    case GenKind::Named:
        return named_graph(spec.name);
    }
    throw std::invalid_argument("unknown generator kind");
}

} // namespace aimkit
