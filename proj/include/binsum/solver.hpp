#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "binsum/bins.hpp"
#include "binsum/divisor.hpp"
#include "binsum/instance.hpp"
#include "binsum/selector.hpp"
#include "binsum/stats.hpp"
#include "binsum/sum_state.hpp"
#include "binsum/types.hpp"

namespace binsum {

class Solver;

struct SolveOptions {
    bool early_exit = true;
    ForceMode force = ForceMode::Auto;
    bool heuristic = true;
    bool ipscd = true;

    // Partition trigger: overall efficiency below p1 and the mean per-value
    // efficiency over the last p3 values below p2.
    double p1 = 0.2;
    double p2 = 0.01;
    int p3 = 50;

    int k = 2;                 // bins per value
    sum_t min_bin_width = 500;

    DivisorConfig divisor;

    // Test hook: called after each processed value.
    std::function<void(const Solver&)> value_observer;
};

/// One solve over one instance. Processes values ascending; equal neighbours
/// go through the repeated-value route, everything else through the per-bin
/// DP/SDP selection. Divisor passes restrict sum space to multiples of the
/// recognised divisor; the partition switch archives the creator array and
/// restarts on the leftover values.
class Solver {
public:
    Solver(Instance instance, SolveOptions options = {})
        : inst_(std::move(instance)), opt_(std::move(options)), state_(inst_.target) {
        BINSUM_CHECK(opt_.p3 >= 1, "options: p3 must be >= 1");
        indexed_values_.push_back(0); // creator index 0 = uncomputed
        stats_.target = inst_.target;
    }

    Decision run() {
        sum_t total = inst_.value_total();
        if (inst_.values.empty() || total < inst_.target) return finish(); // cannot reach target

        std::vector<sum_t> pending = inst_.values;
        while (true) {
            auto leftover = run_pipeline(std::move(pending));
            if (!leftover) break;          // done or stopped early
            if (leftover->empty()) break;  // trigger on the very last value: nothing to repartition
            // Partition switch: archive what partition A computed, restart on
            // the rest as a fresh case (which may recognise divisors again).
            archive_.assign(state_.creator_span().begin(), state_.creator_span().end());
            partitioned_ = true;
            stats_.partition_triggered = true;
            if (!found_ && archive_[static_cast<std::size_t>(inst_.target)] > 0)
                record_success_from_archive();
            state_.clear_creator();
            pending = std::move(*leftover);
        }
        return finish();
    }

    // --- inspection (tests, observers, reporting) ---
    const Instance& instance() const { return inst_; }
    const SumState& state() const { return state_; }
    const BinTable& bins() const { return bins_; }
    const SolveStats& stats() const { return stats_; }
    sum_t current_divisor() const { return current_divisor_; }
    bool found() const { return found_; }
    std::span<const sum_t> indexed_values() const { return indexed_values_; }
    std::span<const value_index_t> archive() const { return archive_; }

    std::vector<sum_t> computed_sums() const {
        std::vector<sum_t> out;
        for (sum_t x = 1; x <= inst_.target; ++x)
            if (state_.is_computed(x)) out.push_back(x);
        return out;
    }

private:
    enum class PassResult { Done, Stopped, PartitionRequested };

    // Runs the divisor-recognition loop plus the final unrestricted pass over
    // one batch of values. Returns the leftover values when a partition switch
    // is requested, nullopt otherwise.
    std::optional<std::vector<sum_t>> run_pipeline(std::vector<sum_t> values) {
        std::vector<sum_t> remaining = std::move(values);
        sum_t previous_divisor = 0;
        std::vector<sum_t> tail;

        while (opt_.ipscd && remaining.size() >= 2) {
            auto cand = recognize_divisor(remaining, previous_divisor, opt_.divisor);
            if (!cand) break;
            sum_t d = cand->d;
            BINSUM_CHECK(previous_divisor == 0 || previous_divisor % d == 0,
                         "divisor chain must divide its predecessor");
            std::vector<sum_t> pass_values;
            std::vector<sum_t> rest;
            for (sum_t v : remaining)
                (v % d == 0 ? pass_values : rest).push_back(v);
            stats_.divisor_chain.push_back(d);
            remaining = std::move(rest);
            PassResult r = run_pass(pass_values, d, tail);
            if (r == PassResult::Stopped) return std::nullopt;
            if (r == PassResult::PartitionRequested) {
                // Leftover = unprocessed tail of this pass + values of later
                // passes, merged back into ascending order.
                std::vector<sum_t> leftover;
                leftover.reserve(tail.size() + remaining.size());
                std::merge(tail.begin(), tail.end(), remaining.begin(), remaining.end(),
                           std::back_inserter(leftover));
                return leftover;
            }
            previous_divisor = d;
        }

        PassResult r = run_pass(remaining, 1, tail);
        if (r == PassResult::PartitionRequested) return tail;
        return std::nullopt;
    }

    PassResult run_pass(std::span<const sum_t> pass_values, sum_t divisor,
                        std::vector<sum_t>& tail_out) {
        current_divisor_ = divisor;
        state_.rebuild_uncomputed(divisor);
        state_.new_sums().clear();
        bins_.init(state_, static_cast<std::int64_t>(pass_values.size()), opt_.k,
                   opt_.min_bin_width, divisor);
        h_prev_.clear();
        pass_value_count_ = 0;
        have_prev_value_ = false;

        for (std::size_t t = 0; t < pass_values.size(); ++t) {
            process_value(pass_values[t]);
            ++pass_value_count_;
            if (opt_.value_observer) opt_.value_observer(*this);
            if (found_ && opt_.early_exit) {
                stats_.bin_ops += bins_.take_ops();
                return PassResult::Stopped;
            }
            if (should_partition()) {
                tail_out.assign(pass_values.begin() + static_cast<std::ptrdiff_t>(t) + 1,
                                pass_values.end());
                stats_.bin_ops += bins_.take_ops();
                return PassResult::PartitionRequested;
            }
        }
        stats_.bin_ops += bins_.take_ops();
        return PassResult::Done;
    }

    void process_value(sum_t v) {
        value_index_t idx = static_cast<value_index_t>(indexed_values_.size());
        indexed_values_.push_back(v);

        h_prev_ = std::move(state_.new_sums());
        state_.new_sums().clear();

        ValueStats vstats;
        vstats.value = v;
        ValueRunner::Config cfg;
        cfg.target = inst_.target;
        cfg.value_index = idx;
        cfg.value = v;
        cfg.stop_on_success = opt_.early_exit;
        cfg.archive = archive_;
        ValueRunner runner(state_, bins_, cfg, vstats,
                           [this](sum_t x) { record_success(x); });

        if (have_prev_value_ && v == prev_value_) {
            runner.run_rvdp(h_prev_);
        } else if (opt_.heuristic) {
            bins_.useful_source_bins(v);
            std::size_t snapshot = bins_.useful_size();
            for (std::size_t t = 0; t < snapshot && !runner.stopped(); ++t)
                runner.process_bin(bins_.useful_at(t), opt_.force);
        } else {
            for (int j = 1; j <= bins_.count() && !runner.stopped(); ++j)
                runner.process_bin(j, opt_.force);
        }
        if (!runner.stopped()) runner.candidate(v);

        prev_value_ = v;
        have_prev_value_ = true;
        stats_.total_considered += vstats.considered;
        stats_.per_value.push_back(vstats);
    }

    bool should_partition() const {
        if (partitioned_ || opt_.p1 <= 0.0) return false;
        if (pass_value_count_ < static_cast<std::uint64_t>(opt_.p3)) return false;
        if (stats_.efficiency() >= opt_.p1) return false;
        double mean = 0.0;
        std::size_t window = static_cast<std::size_t>(opt_.p3);
        for (std::size_t t = stats_.per_value.size() - window; t < stats_.per_value.size(); ++t)
            mean += stats_.per_value[t].efficiency();
        mean /= static_cast<double>(window);
        return mean < opt_.p2;
    }

    // Witness is materialised at first discovery; later processing (when not
    // stopping on success) never overwrites creator entries, but a partition
    // switch clears them.
    void record_success(sum_t x) {
        if (found_) return;
        found_ = true;
        witness_ = backtrack_chain(state_.creator_span(), indexed_values_, x);
        if (!archive_.empty() && x != inst_.target) {
            auto rest = backtrack_chain(archive_, indexed_values_, inst_.target - x);
            witness_.insert(witness_.end(), rest.begin(), rest.end());
        }
        verify_witness();
    }

    void record_success_from_archive() {
        found_ = true;
        witness_ = backtrack_chain(archive_, indexed_values_, inst_.target);
        verify_witness();
    }

    void verify_witness() const {
        sum_t sum = 0;
        for (sum_t v : witness_) sum += v;
        BINSUM_CHECK(sum == inst_.target, "witness does not sum to target");
    }

    Decision finish() {
        Decision d;
        d.yes = found_;
        d.witness = std::move(witness_);
        std::sort(d.witness.begin(), d.witness.end());
        d.stats = stats_;
        return d;
    }

    Instance inst_;
    SolveOptions opt_;
    SumState state_;
    BinTable bins_;
    SolveStats stats_;

    std::vector<sum_t> indexed_values_; // by creator index, in processing order
    std::vector<sum_t> h_prev_;
    sum_t prev_value_ = 0;
    bool have_prev_value_ = false;
    std::uint64_t pass_value_count_ = 0;
    sum_t current_divisor_ = 1;

    std::vector<value_index_t> archive_; // partition A's creator copy
    bool partitioned_ = false;
    bool found_ = false;
    std::vector<sum_t> witness_;
};

inline Decision solve(Instance instance, SolveOptions options = {}) {
    return Solver(std::move(instance), std::move(options)).run();
}

} // namespace binsum
