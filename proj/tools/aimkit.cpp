// aimkit command-line front end.
//
// Exit codes for kernelize / solve / oracle --k / verify:
//   0  YES (or reduced instance)   1  NO   2  input error

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <aimkit/aimkit.hpp>

namespace {

using namespace aimkit;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
    try {
        if (path == "-") return read_graph(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open '" + path + "'");
        return read_graph(in);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

VertexSet load_ids(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return read_vertex_set(in);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

GenKind parse_kind(const std::string& kind) {
    if (kind == "erdos_renyi") return GenKind::ErdosRenyi;
    if (kind == "planted") return GenKind::Planted;
    if (kind == "named") return GenKind::Named;
    throw InputError("unknown generator kind '" + kind + "'");
}

KPolicy parse_policy(const std::string& text) {
    if (text == "planted") return {KPolicy::Kind::Planted, 0};
    if (text == "min") return {KPolicy::Kind::Minimum, 0};
    if (text.rfind("fixed:", 0) == 0) {
        try {
            return {KPolicy::Kind::Fixed, std::stoll(text.substr(6))};
        } catch (const std::exception&) {
        }
    }
    throw InputError("bad --k-policy '" + text + "' (planted | min | fixed:<k>)");
}

void print_stats(std::ostream& out, const SearchStats& stats) {
    out << "step,nodes\n";
    for (const auto& [step, nodes] : stats.nodes_per_step) out << step << ',' << nodes << '\n';
    out << "total," << stats.nodes_total << '\n';
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algorithms for Almost Induced Matching"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    std::string gen_kind = "erdos_renyi", gen_name, gen_out;
    std::size_t gen_n = 10, gen_matching = 4, gen_extra = 3;
    double gen_p = 0.2;
    std::uint64_t gen_seed = 1;
    gen_cmd->add_option("--kind", gen_kind, "erdos_renyi | planted | named")->capture_default_str();
    gen_cmd->add_option("--n", gen_n, "vertex count (erdos_renyi)")->capture_default_str();
    gen_cmd->add_option("--p", gen_p, "edge / wiring probability")->capture_default_str();
    gen_cmd->add_option("--matching", gen_matching, "planted induced-matching edges")->capture_default_str();
    gen_cmd->add_option("--extra", gen_extra, "planted extra vertices")->capture_default_str();
    gen_cmd->add_option("--name", gen_name, "path_<n> | cycle_<n> | complete_<n> | petersen");
    gen_cmd->add_option("--seed", gen_seed)->capture_default_str();
    gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

    // kernelize
    auto* ker_cmd = app.add_subcommand("kernelize", "Reduce an instance to at most 6k vertices");
    std::string ker_in;
    std::int64_t ker_k = 0;
    bool ker_trace = false;
    ker_cmd->add_option("-i,--input", ker_in, "graph file or - for stdin")->required();
    ker_cmd->add_option("--k", ker_k, "deletion budget")->required();
    ker_cmd->add_flag("--trace", ker_trace, "print fired steps, packings and crowns to stderr");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Decide an instance by branch and search");
    std::string solve_in;
    std::int64_t solve_k = -1;
    bool solve_witness = false, solve_stats = false, solve_min = false, solve_audit = false;
    solve_cmd->add_option("-i,--input", solve_in, "graph file or - for stdin")->required();
    auto* k_opt = solve_cmd->add_option("--k", solve_k, "deletion budget");
    solve_cmd->add_flag("--witness", solve_witness, "print the deletion set on YES");
    solve_cmd->add_flag("--stats", solve_stats, "print search-tree node counts as CSV");
    solve_cmd->add_flag("--min", solve_min, "find the minimum budget by descending search")->excludes(k_opt);
    solve_cmd->add_flag("--audit", solve_audit, "cross-check rule precedence and crowns at every node");

    // oracle
    auto* ora_cmd = app.add_subcommand("oracle", "Brute-force minimum deletion (small graphs)");
    std::string ora_in;
    std::int64_t ora_k = -1;
    ora_cmd->add_option("-i,--input", ora_in, "graph file or - for stdin")->required();
    auto* ora_k_opt = ora_cmd->add_option("--k", ora_k, "also decide this budget (sets the exit code)");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "Check a deletion set against a graph");
    std::string ver_in, ver_witness;
    std::int64_t ver_k = 0;
    ver_cmd->add_option("-i,--input", ver_in, "graph file")->required();
    ver_cmd->add_option("--k", ver_k, "deletion budget")->required();
    ver_cmd->add_option("-w,--witness", ver_witness, "file with whitespace-separated vertex ids")->required();

    // factors
    auto* fac_cmd = app.add_subcommand("factors", "Branching factors of recurrences");
    std::vector<int> fac_decreases;
    bool fac_table = false;
    std::string fac_format = "csv";
    fac_cmd->add_option("decreases", fac_decreases, "budget decreases c_1 ... c_l");
    fac_cmd->add_flag("--table", fac_table, "check the Step 1-7 reference factors");
    fac_cmd->add_option("--format", fac_format, "csv")->check(CLI::IsMember({"csv"}));

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run the solver over a seeded corpus, CSV out");
    CorpusSpec corpus;
    std::string bench_kind = "planted", bench_policy = "planted", bench_out, bench_names;
    unsigned bench_jobs = 1;
    bool bench_timing = false;
    bench_cmd->add_option("--kind", bench_kind, "erdos_renyi | planted | named")->capture_default_str();
    bench_cmd->add_option("--count", corpus.count, "instances")->capture_default_str();
    bench_cmd->add_option("--seed", corpus.seed)->capture_default_str();
    bench_cmd->add_option("--n-min", corpus.n_min)->capture_default_str();
    bench_cmd->add_option("--n-max", corpus.n_max)->capture_default_str();
    bench_cmd->add_option("--matching-min", corpus.matching_min)->capture_default_str();
    bench_cmd->add_option("--matching-max", corpus.matching_max)->capture_default_str();
    bench_cmd->add_option("--extra-min", corpus.extra_min)->capture_default_str();
    bench_cmd->add_option("--extra-max", corpus.extra_max)->capture_default_str();
    bench_cmd->add_option("--p", corpus.planted_p, "planted wiring probability")->capture_default_str();
    bench_cmd->add_option("--names", bench_names, "comma-separated named graphs");
    bench_cmd->add_option("--k-policy", bench_policy, "planted | min | fixed:<k>")->capture_default_str();
    bench_cmd->add_option("--jobs", bench_jobs, "worker threads")->capture_default_str();
    bench_cmd->add_flag("--timing", bench_timing, "fill the wall_ms column");
    bench_cmd->add_option("--format", fac_format, "csv")->check(CLI::IsMember({"csv"}));
    bench_cmd->add_option("-o,--output", bench_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*gen_cmd) {
            GenSpec spec;
            spec.kind = parse_kind(gen_kind);
            spec.n = gen_n;
            spec.p = gen_p;
            spec.matching = gen_matching;
            spec.extra = gen_extra;
            spec.name = gen_name;
            spec.seed = gen_seed;
            Graph g;
            try {
                g = gen(spec);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            write_output(gen_out, format_graph(g));
            return 0;
        }

        if (*ker_cmd) {
            const Graph g = load_graph(ker_in);
            std::ostringstream trace;
            const auto kr = reduce(Instance{g, ker_k}, ReduceOptions{false, ker_trace ? &trace : nullptr});
            if (ker_trace) std::cerr << trace.str();
            if (kr.is_no()) {
                std::cout << "NO\n";
                return kExitNo;
            }
            const auto& red = *kr.reduced;
            std::cout << "REDUCED n'=" << red.instance.graph.num_vertices() << " k'=" << red.instance.k << '\n';
            std::cout << "c forced " << format_ids(red.forced) << '\n';
            write_graph(std::cout, red.instance.graph);
            return kExitYes;
        }

        if (*solve_cmd) {
            const Graph g = load_graph(solve_in);
            const SolveOptions opts{solve_audit, solve_audit};
            if (solve_min) {
                const auto mr = minimum_deletion(g, opts);
                std::cout << "MIN_DELETION=" << mr.min_deletion << '\n';
                if (solve_witness) std::cout << "S: " << format_ids(mr.witness) << '\n';
                if (solve_stats) {
                    std::cout << "k,decision,nodes\n";
                    for (const auto& [k, r] : mr.runs)
                        std::cout << k << ',' << (r.yes ? "YES" : "NO") << ',' << r.stats.nodes_total << '\n';
                }
                return kExitYes;
            }
            if (k_opt->count() == 0) throw InputError("solve needs --k or --min");
            const auto r = solve(Instance{g, solve_k}, opts);
            std::cout << (r.yes ? "YES" : "NO") << '\n';
            if (r.yes && solve_witness) std::cout << "S: " << format_ids(*r.witness) << '\n';
            if (solve_stats) print_stats(std::cout, r.stats);
            return r.yes ? kExitYes : kExitNo;
        }

        if (*ora_cmd) {
            const Graph g = load_graph(ora_in);
            OracleResult r;
            try {
                r = min_aim_deletion(g);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            std::cout << "MIM=" << r.mim_edges << " MIN_DELETION=" << r.min_deletion << " S: " << format_ids(r.witness)
                      << '\n';
            if (ora_k_opt->count() > 0) return static_cast<std::int64_t>(r.min_deletion) <= ora_k ? kExitYes : kExitNo;
            return kExitYes;
        }

        if (*ver_cmd) {
            const Graph g = load_graph(ver_in);
            const VertexSet s = load_ids(ver_witness);
            for (Vertex v : s)
                if (!g.is_live(v)) throw InputError("witness vertex " + std::to_string(v) + " is not in the graph");
            const bool ok = static_cast<std::int64_t>(s.size()) <= ver_k && is_aim_deletion_set(g, s);
            std::cout << (ok ? "VALID" : "INVALID") << '\n';
            return ok ? kExitYes : kExitNo;
        }

        if (*fac_cmd) {
            if (fac_table) {
                const auto rows = verify_reference_tables();
                write_table_csv(std::cout, rows);
                for (const auto& row : rows)
                    if (!row.pass) return kExitNo;
                return kExitYes;
            }
            if (fac_decreases.empty()) throw InputError("factors needs decreases or --table");
            Recurrence r{fac_decreases};
            double f = 0;
            try {
                f = branching_factor(r);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", f);
            std::cout << to_string(r) << " -> " << buf << '\n';
            return kExitYes;
        }

        if (*bench_cmd) {
            corpus.kind = parse_kind(bench_kind);
            std::stringstream names(bench_names);
            for (std::string name; std::getline(names, name, ',');)
                if (!name.empty()) corpus.names.push_back(name);
            std::vector<CorpusInstance> instances;
            try {
                instances = build_corpus(corpus);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            const auto records = run_bench(instances, parse_policy(bench_policy), bench_jobs, bench_timing);
            std::ostringstream csv;
            write_bench_csv(csv, records);
            write_output(bench_out, csv.str());
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
