// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Pinned tolerances: kernel size and decisions are exact; factor rows use
// kTableTolerance (1e-3); wall-clock limits are listed with each criterion.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <aimkit/aimkit.hpp>

using namespace aimkit;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kKernelSeconds = 30.0;
constexpr double kSolverSeconds = 300.0;
constexpr double kTableSeconds = 1.0;
constexpr double kPlanted60Seconds = 10.0;
constexpr double kGrowthBase = 1.6957;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Tallies shared by several criteria.
struct Tally {
    std::uint64_t yes_witnesses = 0, bad_witnesses = 0;
    std::uint64_t crowns_applied = 0, crowns_verified = 0;
};

Tally tally;

void note_kernel(const KernelResult& kr) {
    tally.crowns_applied += kr.crowns_applied;
    tally.crowns_verified += kr.crowns_verified;
}

void note_solve(const Instance& inst, const SolveResult& r) {
    tally.crowns_applied += r.stats.crowns_applied;
    tally.crowns_verified += r.stats.crowns_verified;
    if (!r.yes) return;
    ++tally.yes_witnesses;
    if (!r.witness || static_cast<std::int64_t>(r.witness->size()) > inst.k || !is_aim_deletion_set(inst.graph, *r.witness))
        ++tally.bad_witnesses;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  (" << out.detail << ")"
              << std::endl;
}

const SolveOptions kChecked{true, true};
const ReduceOptions kVerify{true, nullptr};

// Criterion 1 corpus: 250 Erdos-Renyi and 250 planted instances.
std::vector<Instance> kernel_corpus() {
    std::vector<Instance> out;
    CorpusSpec er;
    er.kind = GenKind::ErdosRenyi;
    er.count = 250;
    er.seed = 1001;
    CorpusSpec pl;
    pl.kind = GenKind::Planted;
    pl.count = 250;
    pl.seed = 1002;
    Rng rng(1003);
    for (auto& c : build_corpus(er)) {
        const auto n = static_cast<std::int64_t>(c.graph.num_vertices());
        out.push_back({std::move(c.graph), rng.between(1, n / 2)});
    }
    for (auto& c : build_corpus(pl)) out.push_back({std::move(c.graph), *c.planted_k});
    return out;
}

Outcome kernel_bound() {
    const auto start = Clock::now();
    std::size_t reduced = 0, no = 0, violations = 0;
    const auto corpus = kernel_corpus();
    for (const auto& inst : corpus) {
        const auto kr = reduce(inst, kVerify);
        note_kernel(kr);
        if (kr.is_no()) {
            ++no;
            continue;
        }
        ++reduced;
        const auto& r = kr.reduced->instance;
        if (static_cast<std::int64_t>(r.graph.num_vertices()) > 6 * r.k) ++violations;
    }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << corpus.size() << " instances, " << reduced << " reduced, " << no << " NO, " << violations
      << " over 6k', " << secs << " s / limit " << kKernelSeconds << " s";
    return {corpus.size() >= 500 && violations == 0 && secs < kKernelSeconds, d.str()};
}

Outcome kernel_equivalence() {
    CorpusSpec spec;
    spec.kind = GenKind::ErdosRenyi;
    spec.count = 200;
    spec.seed = 2001;
    spec.n_min = 1;
    spec.n_max = 16;
    std::size_t checks = 0, mismatches = 0, bad_witness = 0;
    for (const auto& c : build_corpus(spec)) {
        const auto truth = min_aim_deletion(c.graph).min_deletion;
        for (std::int64_t k = 0; k <= static_cast<std::int64_t>(c.graph.num_vertices()); ++k) {
            ++checks;
            const bool expected = static_cast<std::int64_t>(truth) <= k;
            const auto kr = reduce(Instance{c.graph, k}, kVerify);
            note_kernel(kr);
            bool composed = false;
            if (!kr.is_no()) {
                const auto& red = *kr.reduced;
                const auto sub = min_aim_deletion(red.instance.graph);
                composed = static_cast<std::int64_t>(sub.min_deletion) <= red.instance.k;
                if (composed) {
                    const auto w = set_union(red.forced, sub.witness);
                    if (static_cast<std::int64_t>(w.size()) > k || !is_aim_deletion_set(c.graph, w)) ++bad_witness;
                }
            }
            mismatches += composed != expected ? 1 : 0;
        }
    }
    std::ostringstream d;
    d << checks << " (graph, k) pairs, " << mismatches << " decision mismatches, " << bad_witness
      << " bad recomposed witnesses";
    return {checks > 0 && mismatches == 0 && bad_witness == 0, d.str()};
}

Outcome solver_vs_oracle() {
    const auto start = Clock::now();
    std::size_t exhaustive = 0, seeded = 0, mismatches = 0, min_mismatches = 0;
    // (a) every labelled graph on five vertices, every k in [0, 5].
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) edges.push_back(pairs[i]);
        const Graph g = Graph::from_edges(5, edges);
        const auto truth = min_aim_deletion(g).min_deletion;
        for (std::int64_t k = 0; k <= 5; ++k) {
            const Instance inst{g, k};
            const auto r = solve(inst, kChecked);
            note_solve(inst, r);
            mismatches += r.yes != (static_cast<std::int64_t>(truth) <= k) ? 1 : 0;
            ++exhaustive;
        }
    }
    // (b) seeded graphs with n in [6, 16], every k, plus descending minimum.
    CorpusSpec spec;
    spec.kind = GenKind::ErdosRenyi;
    spec.count = 300;
    spec.seed = 3001;
    spec.n_min = 6;
    spec.n_max = 16;
    for (const auto& c : build_corpus(spec)) {
        const auto truth = min_aim_deletion(c.graph).min_deletion;
        for (std::int64_t k = 0; k <= static_cast<std::int64_t>(c.graph.num_vertices()); ++k) {
            const Instance inst{c.graph, k};
            const auto r = solve(inst, kChecked);
            note_solve(inst, r);
            mismatches += r.yes != (static_cast<std::int64_t>(truth) <= k) ? 1 : 0;
            ++seeded;
        }
        const auto m = minimum_deletion(c.graph, kChecked);
        for (const auto& [k, r] : m.runs) note_solve(Instance{c.graph, k}, r);
        min_mismatches += m.min_deletion != truth ? 1 : 0;
    }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << exhaustive << " exhaustive + " << seeded << " seeded decisions, " << mismatches << " mismatches, "
      << min_mismatches << " minimum mismatches, " << secs << " s / limit " << kSolverSeconds << " s";
    return {mismatches == 0 && min_mismatches == 0 && secs < kSolverSeconds, d.str()};
}

// Criterion 1 instances are also solved so that witness checks cover them.
void solve_kernel_corpus() {
    for (const auto& inst : kernel_corpus()) note_solve(inst, solve(inst, kChecked));
}

Outcome witnesses() {
    std::ostringstream d;
    d << tally.yes_witnesses << " YES answers, " << tally.bad_witnesses << " invalid witnesses";
    return {tally.yes_witnesses > 0 && tally.bad_witnesses == 0, d.str()};
}

Outcome tables() {
    const auto start = Clock::now();
    const auto rows = verify_reference_tables();
    const double secs = seconds_since(start);
    std::size_t bad = 0;
    std::ostringstream d;
    for (const auto& row : rows) {
        bad += row.pass ? 0 : 1;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f", row.computed);
        d << row.label << '=' << buf << ' ';
    }
    d << "| tol " << kTableTolerance << ", " << secs << " s";
    return {rows.size() == 10 && bad == 0 && secs < kTableSeconds, d.str()};
}

Outcome growth() {
    // Planted instances with k' in [1, 22], four seeds each, solved under audit.
    std::vector<GrowthPoint> series;
    std::uint64_t audits = 0;
    Rng rng(6001);
    for (std::int64_t k = 1; k <= 22; ++k) {
        double worst = 0;
        for (int rep = 0; rep < 4; ++rep) {
            const auto m = static_cast<std::size_t>(rng.between(k, k + 10));
            const Graph g = planted(m, static_cast<std::size_t>(k), 0.3, rng.next());
            const Instance inst{g, k};
            const auto r = solve(inst, kChecked);
            note_solve(inst, r);
            if (!r.yes) throw std::runtime_error("planted instance answered NO");
            audits += r.stats.audits;
            worst = std::max(worst, static_cast<double>(r.stats.nodes_total));
        }
        series.push_back({k, worst});
    }
    const auto rep = tree_growth_check(series, kGrowthBase);

    const auto start = Clock::now();
    const Graph big = planted(20, 20, 0.3, 6060);
    const auto big_r = solve(Instance{big, 20});
    const double secs = seconds_since(start);

    std::ostringstream d;
    d << "C=" << rep.constant << " over " << rep.points << " k-values, " << audits << " audited nodes, 0 precedence violations; "
      << "n=60 k=20 " << (big_r.yes ? "YES" : "NO") << " in " << secs << " s / limit " << kPlanted60Seconds << " s";
    return {std::isfinite(rep.constant) && big_r.yes && secs < kPlanted60Seconds, d.str()};
}

Outcome crowns() {
    std::ostringstream d;
    d << tally.crowns_applied << " crowns applied, " << tally.crowns_verified << " passed the clause checkers";
    return {tally.crowns_applied > 0 && tally.crowns_applied == tally.crowns_verified, d.str()};
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + cmd);
    char buf[4096];
    for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
    const int status = pclose(pipe);
    out += "\nexit=" + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
    return out;
}

Outcome determinism() {
    const std::string cli = AIMKIT_CLI;
    const std::string graph = "/tmp/aimkit_accept_" + std::to_string(::getpid()) + ".aim";
    const std::vector<std::string> cmds = {
        cli + " gen --kind planted --matching 12 --extra 9 --p 0.3 --seed 8 -o " + graph + " && cat " + graph,
        cli + " gen --kind erdos_renyi --n 40 --p 0.1 --seed 3",
        cli + " kernelize -i " + graph + " --k 9 --trace 2>&1",
        cli + " solve -i " + graph + " --k 9 --witness --stats",
        cli + " bench --kind erdos_renyi --count 40 --seed 4 --n-max 30 --k-policy fixed:6 --jobs 4",
        cli + " bench --kind planted --count 20 --seed 5",
        cli + " factors --table",
    };
    std::size_t differing = 0;
    for (const auto& cmd : cmds) differing += capture(cmd) != capture(cmd) ? 1 : 0;
    std::remove(graph.c_str());
    std::ostringstream d;
    d << cmds.size() << " seeded CLI commands run twice, " << differing << " differed";
    return {differing == 0, d.str()};
}

} // namespace

int main() {
    report(1, "kernel bound |V'| <= 6k'", kernel_bound);
    report(2, "kernel equivalence vs oracle", kernel_equivalence);
    report(3, "solver vs oracle", solver_vs_oracle);
    report(4, "witness validity", [] {
        solve_kernel_corpus();
        return witnesses();
    });
    report(5, "branching-factor tables", tables);
    report(6, "search-tree growth and n=60 planted run", growth);
    report(7, "crown validity", crowns);
    report(8, "determinism", determinism);
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
