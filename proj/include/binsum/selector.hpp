#pragma once

#include <functional>
#include <optional>
#include <span>

#include "binsum/bins.hpp"
#include "binsum/stats.hpp"
#include "binsum/sum_state.hpp"
#include "binsum/types.hpp"

namespace binsum {

enum class Algo { Dp, Sdp };
enum class ForceMode { Auto, Dp, Sdp };
enum class CandidateOutcome { New, Duplicate, OutOfRange };

/// Candidate range produced by extending source bin j's computed extrema by v.
/// a2 is clamped to the target, so the range spans at most two bins.
struct SdpRange {
    sum_t a1 = 0, a2 = 0;
    int b1 = 0, b2 = 0;
};

struct CostEstimate {
    std::uint64_t c1 = 0; // sums DP would consider: computed count of source bin
    std::uint64_t c2 = 0; // sums SDP would consider at most: c3 + c4
    std::uint64_t c3 = 0; // walk down in b1: highest uncomputed there minus a1
    std::uint64_t c4 = 0; // walk up in b2: a2 minus lowest uncomputed there
};

inline std::optional<SdpRange> make_sdp_range(const BinTable& bins, int j, sum_t v,
                                              sum_t target) {
    const Bin& src = bins.bin(j);
    if (src.computed.empty()) return std::nullopt;
    SdpRange r;
    r.a1 = src.lo_computed + v;
    if (r.a1 > target) return std::nullopt; // every candidate overshoots
    r.a2 = std::min(src.hi_computed + v, target);
    r.b1 = bins.bin_of(r.a1);
    r.b2 = bins.bin_of(r.a2);
    BINSUM_CHECK(r.b2 - r.b1 == 0 || r.b2 - r.b1 == 1, "sdp range spans more than two bins");
    return r;
}

inline CostEstimate estimate_costs(const BinTable& bins, int j, const SdpRange& r) {
    CostEstimate c;
    c.c1 = static_cast<std::uint64_t>(bins.bin(j).computed_count());
    const Bin& b1 = bins.bin(r.b1);
    const Bin& b2 = bins.bin(r.b2);
    if (b1.has_uncomputed() && b1.hi_uncomputed > r.a1)
        c.c3 = static_cast<std::uint64_t>(b1.hi_uncomputed - r.a1);
    if (b2.has_uncomputed() && r.a2 > b2.lo_uncomputed)
        c.c4 = static_cast<std::uint64_t>(r.a2 - b2.lo_uncomputed);
    c.c2 = c.c3 + c.c4;
    return c;
}

inline Algo choose_algorithm(const CostEstimate& c) {
    return c.c1 < c.c2 ? Algo::Dp : Algo::Sdp;
}

/// Executes one value's candidate generation over a prepared state.
///
/// Shared rules, independent of which routine produced a candidate:
///  - every examined candidate in 1..target counts as considered;
///  - a sum created while processing value i is never used as a source for
///    the same value (DP skips such sources, SDP rejects such predecessors);
///  - each new sum runs the success test (x == target, or the archived
///    partition holds the complement).
class ValueRunner {
public:
    struct Config {
        sum_t target = 0;
        value_index_t value_index = 0;
        sum_t value = 0;
        bool stop_on_success = false;
        std::span<const value_index_t> archive; // partition-A creator copy; empty when unused
    };

    ValueRunner(SumState& state, BinTable& bins, const Config& cfg, ValueStats& stats,
                std::function<void(sum_t)> on_first_success = {})
        : state_(state), bins_(bins), cfg_(cfg), stats_(stats),
          on_first_success_(std::move(on_first_success)) {}

    bool success_hit() const { return success_hit_; }
    bool stopped() const { return success_hit_ && cfg_.stop_on_success; }

    CandidateOutcome candidate(sum_t y) {
        if (y < 1 || y > cfg_.target) return CandidateOutcome::OutOfRange;
        ++stats_.considered;
        if (state_.is_computed(y)) return CandidateOutcome::Duplicate;
        mark_computed(y);
        return CandidateOutcome::New;
    }

    /// Select and run the better of DP and SDP for source bin j.
    void process_bin(int j, ForceMode force) {
        auto range = make_sdp_range(bins_, j, cfg_.value, cfg_.target);
        if (!range) return;
        bins_.count_op(); // selection estimate
        Algo algo;
        switch (force) {
        case ForceMode::Dp: algo = Algo::Dp; break;
        case ForceMode::Sdp: algo = Algo::Sdp; break;
        default: algo = choose_algorithm(estimate_costs(bins_, j, *range)); break;
        }
        if (algo == Algo::Dp)
            run_dp(j);
        else
            run_sdp(*range);
    }

    /// Extend each computed sum in bin j by the value. The array length is
    /// snapshotted so sums appended during this bin's processing are not
    /// revisited.
    void run_dp(int j) {
        const Bin& b = bins_.bin(j);
        std::size_t snapshot = b.computed.size();
        for (std::size_t t = 0; t < snapshot && !stopped(); ++t) {
            sum_t x = b.computed[t];
            if (state_.creator_of(x) == cfg_.value_index) continue;
            if (x + cfg_.value > cfg_.target) continue;
            candidate(x + cfg_.value);
        }
    }

    /// Walk the uncomputed sums covering [a1, a2] and admit each one whose
    /// predecessor (y - value) is already computed. When the range sits in one
    /// bin a single ascending sweep is used; across two bins, a downward walk
    /// from b1's highest uncomputed sum meets an upward walk from b2's lowest.
    void run_sdp(const SdpRange& r) {
        if (r.b1 == r.b2) {
            sum_t y = bins_.bin(r.b1).lo_uncomputed;
            while (y != 0 && y <= r.a2 && !stopped()) {
                sum_t next = state_.next_of(y);
                if (y >= r.a1) probe(y);
                y = next == state_.tail() ? 0 : next;
            }
            return;
        }
        sum_t y = bins_.bin(r.b1).hi_uncomputed;
        while (y != 0 && y >= r.a1 && !stopped()) {
            sum_t prev = state_.prev_of(y);
            probe(y);
            y = prev; // head sentinel 0 ends the walk
        }
        y = bins_.bin(r.b2).lo_uncomputed;
        while (y != 0 && y <= r.a2 && !stopped()) {
            sum_t next = state_.next_of(y);
            probe(y);
            y = next == state_.tail() ? 0 : next;
        }
    }

    /// For a value equal to its predecessor, only sums created at the previous
    /// value can yield anything new; extend exactly those.
    void run_rvdp(std::span<const sum_t> new_sums_prev) {
        for (sum_t x : new_sums_prev) {
            if (stopped()) return;
            if (x + cfg_.value > cfg_.target) continue;
            candidate(x + cfg_.value);
        }
    }

private:
    void probe(sum_t y) {
        ++stats_.considered;
        sum_t x = y - cfg_.value;
        BINSUM_CHECK(x >= 1, "sdp probe below sum space");
        value_index_t c = state_.creator_of(x);
        if (c > 0 && c != cfg_.value_index) mark_computed(y);
    }

    void mark_computed(sum_t y) {
        auto nb = state_.unlink(y);
        state_.set_creator(y, cfg_.value_index);
        bins_.on_computed(y, nb.prev, nb.next);
        state_.new_sums().push_back(y);
        ++stats_.created;
        if (!success_hit_ && is_success(y)) {
            success_hit_ = true;
            if (on_first_success_) on_first_success_(y);
        }
    }

    bool is_success(sum_t y) const {
        if (y == cfg_.target) return true;
        if (cfg_.archive.empty()) return false;
        return cfg_.archive[static_cast<std::size_t>(cfg_.target - y)] > 0;
    }

    SumState& state_;
    BinTable& bins_;
    Config cfg_;
    ValueStats& stats_;
    std::function<void(sum_t)> on_first_success_;
    bool success_hit_ = false;
};

} // namespace binsum
