#pragma once

#include <span>
#include <vector>

#include "binsum/types.hpp"

namespace binsum {

/// Target-indexed sum state.
///
/// creator_[x] = 0 while x is uncomputed, otherwise the index of the value
/// that first computed x. Uncomputed sums form a doubly-linked list threaded
/// through two fixed arrays, node ids = the sums themselves, with head
/// sentinel 0 and tail sentinel target+1. Unlinking keeps the removed node's
/// own links intact so callers can step from a node's former neighbours.
class SumState {
public:
    explicit SumState(sum_t target)
        : target_(target),
          creator_(static_cast<std::size_t>(target) + 2, 0),
          next_(static_cast<std::size_t>(target) + 2, 0),
          prev_(static_cast<std::size_t>(target) + 2, 0) {
        BINSUM_CHECK(target >= 1 && target <= max_target, "SumState: target out of range");
        rebuild_uncomputed(1);
    }

    sum_t target() const { return target_; }
    sum_t head() const { return 0; }
    sum_t tail() const { return target_ + 1; }

    value_index_t creator_of(sum_t x) const { return creator_[static_cast<std::size_t>(x)]; }
    bool is_computed(sum_t x) const { return creator_of(x) > 0; }

    sum_t first_uncomputed() const { return next_[0]; } // tail() when empty
    sum_t next_of(sum_t x) const { return next_[static_cast<std::size_t>(x)]; }
    sum_t prev_of(sum_t x) const { return prev_[static_cast<std::size_t>(x)]; }

    void set_creator(sum_t x, value_index_t i) {
        BINSUM_CHECK(creator_[static_cast<std::size_t>(x)] == 0 && i > 0,
                     "set_creator: sum already computed");
        creator_[static_cast<std::size_t>(x)] = i;
    }

    struct Neighbors {
        sum_t prev;
        sum_t next;
    };

    /// Unlink a live node in O(1) and return its neighbours as they were.
    Neighbors unlink(sum_t x) {
        std::size_t ux = static_cast<std::size_t>(x);
        sum_t p = prev_[ux];
        sum_t n = next_[ux];
        BINSUM_CHECK(next_[static_cast<std::size_t>(p)] == x &&
                         prev_[static_cast<std::size_t>(n)] == x,
                     "unlink: node not live");
        next_[static_cast<std::size_t>(p)] = static_cast<std::int32_t>(n);
        prev_[static_cast<std::size_t>(n)] = static_cast<std::int32_t>(p);
        return {p, n};
    }

    /// Rebuild the uncomputed list as the not-yet-computed multiples of step,
    /// ascending. Sums that are not multiples of step are left out entirely.
    void rebuild_uncomputed(sum_t step) {
        sum_t last = 0;
        for (sum_t x = step; x <= target_; x += step) {
            if (creator_[static_cast<std::size_t>(x)] != 0) continue;
            prev_[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(last);
            next_[static_cast<std::size_t>(last)] = static_cast<std::int32_t>(x);
            last = x;
        }
        next_[static_cast<std::size_t>(last)] = static_cast<std::int32_t>(tail());
        prev_[static_cast<std::size_t>(tail())] = static_cast<std::int32_t>(last);
    }

    void clear_creator() { std::fill(creator_.begin(), creator_.end(), 0); }

    std::span<const value_index_t> creator_span() const { return creator_; }

    /// Sums newly computed while processing the current value.
    std::vector<sum_t>& new_sums() { return new_sums_; }
    const std::vector<sum_t>& new_sums() const { return new_sums_; }

    std::vector<sum_t> live_nodes() const {
        std::vector<sum_t> out;
        for (sum_t x = first_uncomputed(); x != tail(); x = next_of(x)) out.push_back(x);
        return out;
    }

private:
    sum_t target_;
    std::vector<value_index_t> creator_;
    std::vector<std::int32_t> next_; // node links hold sums; max_target keeps them in range
    std::vector<std::int32_t> prev_;
    std::vector<sum_t> new_sums_;
};

/// Recover a witness chain from a creator array: from sum x take the value
/// that created it and continue from the remainder until it reaches zero.
/// values_by_index is indexed by creator index (slot 0 unused).
inline std::vector<sum_t> backtrack_chain(std::span<const value_index_t> creator,
                                          std::span<const sum_t> values_by_index, sum_t from) {
    std::vector<sum_t> chain;
    sum_t x = from;
    while (x > 0) {
        value_index_t i = creator[static_cast<std::size_t>(x)];
        BINSUM_CHECK(i > 0, "backtrack: broken chain");
        sum_t v = values_by_index[static_cast<std::size_t>(i)];
        chain.push_back(v);
        x -= v;
    }
    BINSUM_CHECK(x == 0, "backtrack: chain undershot zero");
    return chain;
}

} // namespace binsum
