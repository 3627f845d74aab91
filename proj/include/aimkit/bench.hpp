#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "generate.hpp"
#include "kernel.hpp"
#include "solver.hpp"

namespace aimkit {

struct CorpusInstance {
    std::string id;
    Graph graph;
    std::optional<std::int64_t> planted_k;
};

/// Recipe for a seeded corpus. Instance i draws its parameters and its own
/// generator seed from one Rng seeded with `seed`, in index order.
struct CorpusSpec {
    GenKind kind = GenKind::ErdosRenyi;
    std::size_t count = 0;
    std::uint64_t seed = 1;
    std::size_t n_min = 10, n_max = 60;                // erdos_renyi
    std::vector<double> probabilities{0.05, 0.1, 0.2, 0.4};
    std::size_t matching_min = 2, matching_max = 10;   // planted
    std::size_t extra_min = 1, extra_max = 10;
    double planted_p = 0.3;
    std::vector<std::string> names;                    // named
};

inline std::vector<CorpusInstance> build_corpus(const CorpusSpec& spec) {
    std::vector<CorpusInstance> out;
    if (spec.kind == GenKind::Named) {
        for (const auto& name : spec.names) out.push_back({name, named_graph(name), std::nullopt});
        return out;
    }
    Rng rng(spec.seed);
    for (std::size_t i = 0; i < spec.count; ++i) {
        CorpusInstance inst;
        char id[96];
        if (spec.kind == GenKind::ErdosRenyi) {
            const auto n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(spec.n_min),
                                                                static_cast<std::int64_t>(spec.n_max)));
            const double p = spec.probabilities[rng.below(spec.probabilities.size())];
            const std::uint64_t seed = rng.next();
            std::snprintf(id, sizeof id, "er_%zu_n%zu_p%.2f", i, n, p);
            inst.graph = erdos_renyi(n, p, seed);
        } else {
            const auto m = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(spec.matching_min),
                                                                static_cast<std::int64_t>(spec.matching_max)));
            const auto x = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(spec.extra_min),
                                                                static_cast<std::int64_t>(spec.extra_max)));
            const std::uint64_t seed = rng.next();
            std::snprintf(id, sizeof id, "planted_%zu_m%zu_k%zu", i, m, x);
            inst.graph = planted(m, x, spec.planted_p, seed);
            inst.planted_k = static_cast<std::int64_t>(x);
        }
        inst.id = id;
        out.push_back(std::move(inst));
    }
    return out;
}

/// How the budget of each bench run is chosen.
struct KPolicy {
    enum class Kind { Planted, Fixed, Minimum } kind = Kind::Minimum;
    std::int64_t fixed = 0;
};

struct BenchRecord {
    std::string instance;
    std::size_t n = 0, m = 0;
    std::int64_t k = 0;
    bool yes = false;
    std::uint64_t nodes_total = 0;
    std::optional<std::size_t> kernel_n; // empty when the kernel answers NO
    std::optional<std::int64_t> kernel_k;
    std::optional<double> wall_ms;       // only recorded on request
};

inline BenchRecord bench_one(const CorpusInstance& inst, const KPolicy& policy, bool timing) {
    const auto start = std::chrono::steady_clock::now();
    BenchRecord rec;
    rec.instance = inst.id;
    rec.n = inst.graph.num_vertices();
    rec.m = inst.graph.num_edges();
    switch (policy.kind) {
    case KPolicy::Kind::Planted:
        rec.k = inst.planted_k.value_or(static_cast<std::int64_t>(rec.n));
        break;
    case KPolicy::Kind::Fixed:
        rec.k = policy.fixed;
        break;
    case KPolicy::Kind::Minimum:
        rec.k = static_cast<std::int64_t>(minimum_deletion(inst.graph).min_deletion);
        break;
    }
    const auto kr = reduce(Instance{inst.graph, rec.k});
    if (!kr.is_no()) {
        rec.kernel_n = kr.reduced->instance.graph.num_vertices();
        rec.kernel_k = kr.reduced->instance.k;
    }
    const auto sr = solve(Instance{inst.graph, rec.k});
    rec.yes = sr.yes;
    rec.nodes_total = sr.stats.nodes_total;
    if (timing)
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

/// One record per instance, in corpus order whatever the worker count.
inline std::vector<BenchRecord> run_bench(const std::vector<CorpusInstance>& corpus, const KPolicy& policy,
                                          unsigned jobs = 1, bool timing = false) {
    std::vector<BenchRecord> records(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) records[i] = bench_one(corpus[i], policy, timing);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return records;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "instance,n,m,k,decision,nodes_total,kernel_n,kernel_k,wall_ms\n";
    for (const auto& r : records) {
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.k << ',' << (r.yes ? "YES" : "NO") << ','
            << r.nodes_total << ',';
        if (r.kernel_n)
            out << *r.kernel_n << ',' << *r.kernel_k << ',';
        else
            out << "NO,NO,";
        if (r.wall_ms) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", *r.wall_ms);
            out << buf;
        } else {
            out << '-';
        }
        out << '\n';
    }
}

} // namespace aimkit
