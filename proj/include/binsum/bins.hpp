#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "binsum/sum_state.hpp"
#include "binsum/types.hpp"

namespace binsum {

/// Summary of one equal-width segment of sum space. Extrema use 0 as the
/// "none" sentinel (sums are >= 1).
struct Bin {
    sum_t lo_sum = 0, hi_sum = 0;     // inclusive range; last bin capped at target
    std::vector<sum_t> computed;      // computed sums in range, append-ordered
    sum_t lo_computed = 0, hi_computed = 0;
    sum_t lo_uncomputed = 0, hi_uncomputed = 0;

    std::int64_t computed_count() const { return static_cast<std::int64_t>(computed.size()); }
    bool has_uncomputed() const { return lo_uncomputed != 0; }
};

/// g = k*n equal-width bins over 1..target, plus the bookkeeping the per-value
/// loop needs: which bins still hold uncomputed sums (intrusive list, O(1)
/// removal), which hold computed sums, and the cached useful-source-bin list.
class BinTable {
public:
    static sum_t width_for(sum_t target, std::int64_t n_values, int k, sum_t min_width) {
        return std::max(ceil_div(target, static_cast<sum_t>(k) * n_values), min_width);
    }

    /// Rebuild all bins from the state. Computed sums are rescanned from the
    /// creator array stepping by `step` (every computed sum is a multiple of
    /// the current step); uncomputed extrema come from one walk of the list.
    void init(const SumState& state, std::int64_t n_values, int k, sum_t min_width, sum_t step) {
        target_ = state.target();
        width_ = width_for(target_, std::max<std::int64_t>(1, n_values), k, min_width);
        count_ = static_cast<int>(ceil_div(target_, width_));

        bins_.assign(static_cast<std::size_t>(count_) + 1, Bin{});
        for (int j = 1; j <= count_; ++j) {
            bins_[static_cast<std::size_t>(j)].lo_sum = static_cast<sum_t>(j - 1) * width_ + 1;
            bins_[static_cast<std::size_t>(j)].hi_sum =
                std::min(static_cast<sum_t>(j) * width_, target_);
        }
        ops_ += static_cast<std::uint64_t>(count_);

        bins_with_computed_.clear();
        for (sum_t x = step; x <= target_; x += step) {
            if (!state.is_computed(x)) continue;
            Bin& b = bins_[static_cast<std::size_t>(bin_of(x))];
            if (b.computed.empty()) {
                bins_with_computed_.push_back(bin_of(x));
                b.lo_computed = x;
            }
            b.computed.push_back(x);
            b.hi_computed = x; // ascending scan
        }

        for (sum_t y = state.first_uncomputed(); y != state.tail(); y = state.next_of(y)) {
            Bin& b = bins_[static_cast<std::size_t>(bin_of(y))];
            if (!b.has_uncomputed()) b.lo_uncomputed = y;
            b.hi_uncomputed = y;
        }

        bwu_next_.assign(static_cast<std::size_t>(count_) + 2, 0);
        bwu_prev_.assign(static_cast<std::size_t>(count_) + 2, 0);
        bwu_count_ = 0;
        int last = 0;
        for (int j = 1; j <= count_; ++j) {
            if (!bins_[static_cast<std::size_t>(j)].has_uncomputed()) continue;
            bwu_prev_[static_cast<std::size_t>(j)] = last;
            bwu_next_[static_cast<std::size_t>(last)] = j;
            last = j;
            ++bwu_count_;
        }
        bwu_next_[static_cast<std::size_t>(last)] = count_ + 1;
        bwu_prev_[static_cast<std::size_t>(count_) + 1] = last;

        useful_.clear();
        useful_valid_ = false;
    }

    sum_t width() const { return width_; }
    int count() const { return count_; }
    sum_t target() const { return target_; }

    int bin_of(sum_t x) const {
        BINSUM_CHECK(x >= 1 && x <= target_, "bin_of: sum out of range");
        return bin_index_raw(x);
    }

    const Bin& bin(int j) const { return bins_[static_cast<std::size_t>(j)]; }

    int bins_with_uncomputed_count() const { return bwu_count_; }
    std::span<const int> bins_with_computed() const { return bins_with_computed_; }

    std::uint64_t ops() const { return ops_; }
    std::uint64_t take_ops() {
        std::uint64_t o = ops_;
        ops_ = 0;
        return o;
    }
    void count_op() { ++ops_; }

    /// Summary maintenance for a freshly computed sum. prev_live/next_live are
    /// the neighbours x had in the uncomputed list just before it was removed;
    /// stepping one node and clamping to the bin range re-derives the extrema.
    void on_computed(sum_t x, sum_t prev_live, sum_t next_live) {
        ++ops_;
        int j = bin_of(x);
        Bin& b = bins_[static_cast<std::size_t>(j)];
        if (b.computed.empty()) {
            b.computed.reserve(4);
            bins_with_computed_.push_back(j);
            if (useful_valid_) useful_.push_back(j);
        }
        b.computed.push_back(x);
        if (b.lo_computed == 0 || x < b.lo_computed) b.lo_computed = x;
        if (x > b.hi_computed) b.hi_computed = x;

        bool had_uncomputed = b.has_uncomputed();
        if (x == b.lo_uncomputed) b.lo_uncomputed = next_live <= b.hi_sum ? next_live : 0;
        if (x == b.hi_uncomputed) b.hi_uncomputed = prev_live >= b.lo_sum ? prev_live : 0;
        BINSUM_CHECK((b.lo_uncomputed == 0) == (b.hi_uncomputed == 0),
                     "on_computed: inconsistent uncomputed extrema");
        if (had_uncomputed && !b.has_uncomputed()) bwu_remove(j);
    }

    /// Cached list of source bins worth processing for value v: bins with at
    /// least one computed sum whose candidate window can still reach an
    /// uncomputed sum. Rebuilt when v has drifted a full bin width since the
    /// list was built or when the uncomputed-bin count has halved.
    /// Result is ascending and deduplicated.
    std::span<const int> useful_source_bins(sum_t v) {
        if (!useful_valid_ || v - useful_built_at_ >= width_ ||
            2 * bwu_count_ <= useful_built_bwu_) {
            rebuild_useful(v);
        }
        return useful_;
    }

    // The cached list can grow (0->1 computed transitions) while a value is
    // being processed; callers iterate by index against a snapshot bound.
    std::size_t useful_size() const { return useful_.size(); }
    int useful_at(std::size_t t) const { return useful_[t]; }
    bool useful_cache_valid() const { return useful_valid_; }

    /// Would processing bin j on behalf of any value in [v, v + width) be able
    /// to reach an uncomputed sum? Tested over the static bin bounds plus a
    /// one-bin margin so the answer stays valid for the cache's lifetime.
    bool qualifies(int j, sum_t v) const {
        const Bin& b = bins_[static_cast<std::size_t>(j)];
        int wlo = bin_index_raw(b.lo_sum + v);
        int whi = static_cast<int>(
            std::min<sum_t>(count_, static_cast<sum_t>(bin_index_raw(b.hi_sum + v)) + 1));
        for (int jj = wlo; jj <= whi; ++jj)
            if (bins_[static_cast<std::size_t>(jj)].has_uncomputed()) return true;
        return false;
    }

private:
    // Range arithmetic without the 1..target precondition (window math may
    // produce indexes beyond the last bin; callers clamp).
    int bin_index_raw(sum_t x) const { return static_cast<int>((x - 1) / width_ + 1); }

    void bwu_remove(int j) {
        int p = bwu_prev_[static_cast<std::size_t>(j)];
        int n = bwu_next_[static_cast<std::size_t>(j)];
        bwu_next_[static_cast<std::size_t>(p)] = n;
        bwu_prev_[static_cast<std::size_t>(n)] = p;
        --bwu_count_;
    }

    void rebuild_useful(sum_t v) {
        useful_.clear();
        useful_valid_ = true;
        useful_built_at_ = v;
        useful_built_bwu_ = bwu_count_;

        // Either filter the bins that have computed sums, or back-map from the
        // bins that still have uncomputed sums, whichever scans fewer bins.
        std::size_t cost_direct = bins_with_computed_.size();
        std::size_t cost_backmap = static_cast<std::size_t>(bwu_count_) * 3;
        if (cost_direct <= cost_backmap) {
            for (int j : bins_with_computed_) {
                ++ops_;
                if (qualifies(j, v)) useful_.push_back(j);
            }
        } else {
            for (int b = bwu_next_[0]; b != count_ + 1;
                 b = bwu_next_[static_cast<std::size_t>(b)]) {
                sum_t bl = static_cast<sum_t>(b) * width_; // arithmetic bin end
                sum_t jhi_num = bl - v - 1;
                if (jhi_num < 0) continue;
                int jhi = static_cast<int>(std::min<sum_t>(count_, jhi_num / width_ + 1));
                int jlo = static_cast<int>(
                    std::max<sum_t>(1, static_cast<sum_t>(b) - 2 - (v - 1) / width_));
                for (int j = jlo; j <= jhi; ++j) {
                    ++ops_;
                    if (!bins_[static_cast<std::size_t>(j)].computed.empty() && qualifies(j, v))
                        useful_.push_back(j);
                }
            }
        }
        std::sort(useful_.begin(), useful_.end());
        useful_.erase(std::unique(useful_.begin(), useful_.end()), useful_.end());
    }

    sum_t target_ = 0;
    sum_t width_ = 0;
    int count_ = 0;
    std::vector<Bin> bins_;

    std::vector<int> bins_with_computed_; // append order of first computed sum
    std::vector<int> bwu_next_, bwu_prev_;
    int bwu_count_ = 0;

    std::vector<int> useful_;
    sum_t useful_built_at_ = 0;
    int useful_built_bwu_ = 0;
    bool useful_valid_ = false;

    std::uint64_t ops_ = 0;
};

} // namespace binsum
