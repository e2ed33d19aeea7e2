// binsum: exact subset-sum decisions over positive integers, with instance
// generators and a benchmark grid runner.
//
// Exit codes: solve returns 0 for YES, 1 for NO, 2 for input errors and 3 when
// an oracle cross-check disagrees. gen/bench return 0 on success, 2 on input
// errors; bench returns 3 if any cell fails its oracle check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binsum/bench.hpp"
#include "binsum/generators.hpp"
#include "binsum/instance.hpp"
#include "binsum/instance_io.hpp"
#include "binsum/oracles.hpp"
#include "binsum/solver.hpp"

namespace {

using namespace binsum;

int env_threads() {
    const char* raw = std::getenv("BINSUM_THREADS");
    if (!raw) return 1;
    int n = std::atoi(raw);
    return n < 1 ? 1 : n;
}

std::string join_values(const std::vector<sum_t>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(values[i]);
    }
    return s;
}

struct SolveArgs {
    std::string file;
    bool no_early_exit = false;
    bool witness = false;
    std::string oracle = "none";
    std::string force = "auto";
    bool no_heuristic = false;
    bool no_ipscd = false;
    double p1 = 0.2, p2 = 0.01;
    int p3 = 50;
    std::string report;
};

int cmd_solve(const SolveArgs& args) {
    RawInstance raw = read_instance_file(args.file);
    Instance inst = ingest(raw.values, raw.target);

    SolveOptions opt;
    opt.early_exit = !args.no_early_exit;
    opt.heuristic = !args.no_heuristic;
    opt.ipscd = !args.no_ipscd;
    opt.p1 = args.p1;
    opt.p2 = args.p2;
    opt.p3 = args.p3;
    if (args.force == "dp") opt.force = ForceMode::Dp;
    else if (args.force == "sdp") opt.force = ForceMode::Sdp;

    Decision d = solve(inst, opt);

    std::cout << "decision=" << (d.yes ? "YES" : "NO") << '\n';
    std::cout << "n=" << inst.input_count << '\n';
    std::cout << "t=" << inst.target << '\n';
    std::cout << "kept=" << inst.values.size() << '\n';
    std::cout << "z=" << d.stats.total_considered << '\n';
    std::cout << "e=" << d.stats.efficiency() << '\n';
    std::cout << "partition=" << (d.stats.partition_triggered ? 1 : 0) << '\n';
    std::cout << "divisors=" << format_divisors(d.stats.divisor_chain) << '\n';
    std::cout << "bin_op_fraction=" << d.stats.bin_op_fraction() << '\n';
    if (args.witness && d.yes) std::cout << "witness=" << join_values(d.witness) << '\n';

    bool oracle_mismatch = false;
    if (args.oracle != "none") {
        OracleResult o = args.oracle == "hs" ? hs_decide(inst.values, inst.target)
                                             : bellman_decide(inst.values, inst.target);
        oracle_mismatch = o.yes != d.yes;
        std::cout << "oracle=" << args.oracle << '\n';
        std::cout << "oracle_match=" << (oracle_mismatch ? 0 : 1) << '\n';
    }

    if (!args.report.empty()) {
        nlohmann::json j;
        j["decision"] = d.yes ? "YES" : "NO";
        j["n"] = inst.input_count;
        j["t"] = inst.target;
        j["kept"] = inst.values.size();
        j["z"] = d.stats.total_considered;
        j["e"] = d.stats.efficiency();
        j["partition"] = d.stats.partition_triggered;
        j["divisors"] = d.stats.divisor_chain;
        j["bin_op_fraction"] = d.stats.bin_op_fraction();
        if (d.yes) j["witness"] = d.witness;
        std::ofstream out(args.report);
        if (!out) throw std::runtime_error("cannot write report '" + args.report + "'");
        out << j.dump(2) << '\n';
    }

    if (oracle_mismatch) return 3;
    return d.yes ? 0 : 1;
}

struct GenArgs {
    std::string family = "random";
    std::int64_t n = 0;
    sum_t t = 0;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenArgs& args) {
    GeneratedInstance gen = gen_family(args.family, args.n, args.t, args.seed);
    RawInstance raw{gen.values, gen.target};
    write_instance_file(args.out, raw);
    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(instance_digest(raw)));
    std::cout << "file=" << args.out << '\n';
    std::cout << "digest=" << digest << '\n';
    return 0;
}

struct BenchArgs {
    std::vector<std::int64_t> n_list;
    std::vector<sum_t> t_list;
    int trials = 10;
    std::string family = "random";
    std::uint64_t seed = 1;
    std::string out;
    bool oracle_check = false;
    bool early_exit = false;
};

int cmd_bench(const BenchArgs& args) {
    BenchGrid grid;
    grid.n_list = args.n_list;
    grid.t_list = args.t_list;
    grid.trials = args.trials;
    grid.family = args.family;
    grid.base_seed = args.seed;
    grid.early_exit = args.early_exit;
    grid.oracle_check = args.oracle_check;
    grid.threads = env_threads();
    if (grid.family != "random" && !is_worst_case_family(grid.family))
        throw GeneratorError("unknown family '" + grid.family + "'");

    std::vector<TrialRecord> records = run_bench(grid);

    std::ofstream csv(args.out);
    if (!csv) throw std::runtime_error("cannot write '" + args.out + "'");
    write_trials_csv(csv, records);

    SummaryTable e_table =
        summarize(records, grid.n_list, grid.t_list, [](const TrialRecord& r) { return r.e; });
    SummaryTable time_table = summarize(records, grid.n_list, grid.t_list,
                                        [](const TrialRecord& r) { return r.runtime_ms; });
    write_summary_text(std::cout, e_table, "mean efficiency");
    write_summary_text(std::cout, time_table, "mean runtime (ms, excluding sort)");

    std::ofstream e_csv(args.out + ".e.csv");
    write_summary_csv(e_csv, e_table);
    std::ofstream time_csv(args.out + ".time.csv");
    write_summary_csv(time_csv, time_table);

    for (const TrialRecord& r : records) {
        if (r.oracle_checked && !r.oracle_match) {
            std::cerr << "oracle mismatch: family=" << r.family << " n=" << r.n
                      << " T=" << r.target << " seed=" << r.seed << '\n';
            return 3;
        }
    }
    std::cout << "trials=" << records.size() << " csv=" << args.out << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binsum: exact subset-sum solver, generators and benchmarks"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd = app.add_subcommand("solve", "decide one instance file");
    solve_cmd->add_option("file", solve_args.file, "instance file")->required();
    solve_cmd->add_flag("--no-early-exit", solve_args.no_early_exit,
                        "process everything even after success");
    solve_cmd->add_flag("--witness", solve_args.witness, "print a witness subset on YES");
    solve_cmd->add_option("--oracle", solve_args.oracle, "cross-check: bellman, hs or none")
        ->check(CLI::IsMember({"bellman", "hs", "none"}));
    solve_cmd->add_option("--force", solve_args.force, "force one algorithm: auto, dp or sdp")
        ->check(CLI::IsMember({"auto", "dp", "sdp"}));
    solve_cmd->add_flag("--no-heuristic", solve_args.no_heuristic,
                        "process all bins instead of the useful-source list");
    solve_cmd->add_flag("--no-ipscd", solve_args.no_ipscd, "disable divisor passes");
    solve_cmd->add_option("--p1", solve_args.p1, "partition trigger: overall efficiency bound");
    solve_cmd->add_option("--p2", solve_args.p2, "partition trigger: windowed efficiency bound");
    solve_cmd->add_option("--p3", solve_args.p3, "partition trigger: window length in values");
    solve_cmd->add_option("--report", solve_args.report, "write a JSON report file");

    GenArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    gen_cmd->add_option("--family", gen_args.family, "random or a worst-case family id")
        ->required();
    gen_cmd->add_option("--n", gen_args.n, "number of values")->required();
    gen_cmd->add_option("--t", gen_args.t, "target")->required();
    gen_cmd->add_option("--seed", gen_args.seed, "seed (default 1)");
    gen_cmd->add_option("--out", gen_args.out, "output file")->required();

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark grid");
    bench_cmd->add_option("--n-list", bench_args.n_list, "n values")->required()->delimiter(',');
    bench_cmd->add_option("--t-list", bench_args.t_list, "targets")->required()->delimiter(',');
    bench_cmd->add_option("--trials", bench_args.trials, "trials per cell (default 10)");
    bench_cmd->add_option("--family", bench_args.family, "instance family (default random)");
    bench_cmd->add_option("--seed", bench_args.seed, "base seed (default 1)");
    bench_cmd->add_option("--out", bench_args.out, "per-trial CSV path")->required();
    bench_cmd->add_flag("--oracle-check", bench_args.oracle_check,
                        "cross-check every cell against the reference decider");
    bench_cmd->add_flag("--early-exit", bench_args.early_exit,
                        "stop cells on success instead of processing everything");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (gen_cmd->parsed()) return cmd_gen(gen_args);
        if (bench_cmd->parsed()) return cmd_bench(bench_args);
    } catch (const binsum::ParseError& e) {
        std::cerr << "error: " << solve_args.file << ": " << e.what() << '\n';
        return 2;
    } catch (const binsum::IngestError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const binsum::GeneratorError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
