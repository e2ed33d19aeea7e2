#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "binsum/generators.hpp"
#include "binsum/instance.hpp"
#include "binsum/oracles.hpp"
#include "binsum/solver.hpp"

namespace binsum {

struct TrialRecord {
    std::int64_t n = 0;
    sum_t target = 0;
    std::string family;
    std::uint64_t seed = 0;
    int trial = 0;
    bool decision = false;
    std::uint64_t z = 0;
    double e = 1.0;
    double runtime_ms = 0.0; // solve only
    double sort_ms = 0.0;    // ingest (sorting + filtering), excluded from runtime
    bool partition = false;
    std::vector<sum_t> divisors;
    double bin_op_fraction = 0.0;
    bool oracle_checked = false;
    bool oracle_match = true;
};

struct BenchGrid {
    std::vector<std::int64_t> n_list;
    std::vector<sum_t> t_list;
    int trials = 10;
    std::string family = "random";
    std::uint64_t base_seed = 1;
    bool early_exit = false; // benches run everything by default
    bool oracle_check = false;
    int threads = 1;
    SolveOptions solve_options; // early_exit overridden per grid
};

inline double elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
        .count();
}

inline TrialRecord run_trial(const std::string& family, std::int64_t n, sum_t target,
                             std::uint64_t seed, int trial, const SolveOptions& options,
                             bool oracle_check) {
    TrialRecord rec;
    rec.n = n;
    rec.target = target;
    rec.family = family;
    rec.seed = seed;
    rec.trial = trial;

    GeneratedInstance gen = gen_family(family, n, target, seed);

    auto t0 = std::chrono::steady_clock::now();
    Instance inst = ingest(gen.values, gen.target);
    rec.sort_ms = elapsed_ms(t0);

    auto t1 = std::chrono::steady_clock::now();
    Decision d = solve(inst, options);
    rec.runtime_ms = elapsed_ms(t1);

    rec.decision = d.yes;
    rec.z = d.stats.total_considered;
    rec.e = d.stats.efficiency();
    rec.partition = d.stats.partition_triggered;
    rec.divisors = d.stats.divisor_chain;
    rec.bin_op_fraction = d.stats.bin_op_fraction();

    if (oracle_check) {
        rec.oracle_checked = true;
        rec.oracle_match = bellman_decide(inst.values, inst.target).yes == d.yes;
    }
    return rec;
}

/// Runs every (n, T, trial) cell; results are ordered by cell regardless of
/// how many workers ran them. Per-cell seeds are derived from the base seed.
inline std::vector<TrialRecord> run_bench(const BenchGrid& grid) {
    struct Cell {
        std::int64_t n;
        sum_t target;
        int trial;
    };
    std::vector<Cell> cells;
    for (std::int64_t n : grid.n_list)
        for (sum_t target : grid.t_list)
            for (int trial = 0; trial < grid.trials; ++trial) cells.push_back({n, target, trial});

    std::vector<TrialRecord> records(cells.size());
    SolveOptions options = grid.solve_options;
    options.early_exit = grid.early_exit;
    options.value_observer = {};

    auto work_one = [&](std::size_t idx) {
        const Cell& c = cells[idx];
        std::uint64_t seed =
            mix_seed(grid.base_seed, static_cast<std::uint64_t>(c.n),
                     static_cast<std::uint64_t>(c.target), static_cast<std::uint64_t>(c.trial));
        records[idx] = run_trial(grid.family, c.n, c.target, seed, c.trial, options,
                                 grid.oracle_check);
    };

    int workers = std::max(1, grid.threads);
    if (workers == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) work_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    work_one(i);
            });
        for (auto& th : pool) th.join();
    }
    return records;
}

inline std::string format_divisors(const std::vector<sum_t>& divisors) {
    if (divisors.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(divisors[i]);
    }
    return s;
}

inline void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "n,T,family,seed,trial,decision,z,e,runtime_ms,sort_ms,partition,divisors,"
           "bin_op_fraction\n";
    for (const TrialRecord& r : records) {
        char buf[64];
        out << r.n << ',' << r.target << ',' << r.family << ',' << r.seed << ',' << r.trial
            << ',' << (r.decision ? "YES" : "NO") << ',' << r.z << ',';
        std::snprintf(buf, sizeof buf, "%.6f", r.e);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.3f", r.sort_ms);
        out << buf << ',' << (r.partition ? 1 : 0) << ',' << format_divisors(r.divisors) << ',';
        std::snprintf(buf, sizeof buf, "%.4f", r.bin_op_fraction);
        out << buf << '\n';
    }
}

/// Mean of one metric per (T, n) cell, T rows and n columns.
struct SummaryTable {
    std::vector<std::int64_t> n_list;
    std::vector<sum_t> t_list;
    std::vector<std::vector<double>> mean; // [t_index][n_index]
};

template <typename Metric>
SummaryTable summarize(const std::vector<TrialRecord>& records,
                       const std::vector<std::int64_t>& n_list, const std::vector<sum_t>& t_list,
                       Metric metric) {
    SummaryTable table;
    table.n_list = n_list;
    table.t_list = t_list;
    table.mean.assign(t_list.size(), std::vector<double>(n_list.size(), 0.0));
    std::vector<std::vector<int>> counts(t_list.size(), std::vector<int>(n_list.size(), 0));
    for (const TrialRecord& r : records) {
        for (std::size_t ti = 0; ti < t_list.size(); ++ti) {
            if (t_list[ti] != r.target) continue;
            for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
                if (n_list[ni] != r.n) continue;
                table.mean[ti][ni] += metric(r);
                ++counts[ti][ni];
            }
        }
    }
    for (std::size_t ti = 0; ti < t_list.size(); ++ti)
        for (std::size_t ni = 0; ni < n_list.size(); ++ni)
            if (counts[ti][ni]) table.mean[ti][ni] /= counts[ti][ni];
    return table;
}

inline void write_summary_csv(std::ostream& out, const SummaryTable& table) {
    out << "T";
    for (std::int64_t n : table.n_list) out << ",n=" << n;
    out << '\n';
    for (std::size_t ti = 0; ti < table.t_list.size(); ++ti) {
        out << table.t_list[ti];
        for (double v : table.mean[ti]) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", v);
            out << ',' << buf;
        }
        out << '\n';
    }
}

inline void write_summary_text(std::ostream& out, const SummaryTable& table,
                               const std::string& title) {
    out << title << '\n';
    out << std::setw(12) << "T";
    for (std::int64_t n : table.n_list) out << std::setw(12) << ("n=" + std::to_string(n));
    out << '\n';
    for (std::size_t ti = 0; ti < table.t_list.size(); ++ti) {
        out << std::setw(12) << table.t_list[ti];
        for (double v : table.mean[ti]) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.4f", v);
            out << std::setw(12) << buf;
        }
        out << '\n';
    }
}

} // namespace binsum
