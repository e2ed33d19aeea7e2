#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "binsum/types.hpp"

namespace binsum {

/// Per-value counters: how many candidate sums were examined while processing
/// one value and how many of them were new.
struct ValueStats {
    sum_t value = 0;
    std::uint64_t considered = 0; // candidate sums examined (incl. SDP probes)
    std::uint64_t created = 0;    // sums newly computed

    // A value that examined nothing wasted nothing.
    double efficiency() const {
        return considered == 0 ? 1.0
                               : static_cast<double>(created) / static_cast<double>(considered);
    }
};

struct SolveStats {
    sum_t target = 0;
    std::uint64_t total_considered = 0; // z, sum of per_value considered
    std::vector<ValueStats> per_value;  // in processing order
    bool partition_triggered = false;
    std::vector<sum_t> divisor_chain;   // applied divisors >= 2, in order
    std::uint64_t bin_ops = 0;          // bin-management operations

    double efficiency() const {
        if (total_considered == 0) return 1.0;
        return std::min(1.0, static_cast<double>(target) / static_cast<double>(total_considered));
    }

    double bin_op_fraction() const {
        std::uint64_t all = total_considered + bin_ops;
        return all == 0 ? 0.0 : static_cast<double>(bin_ops) / static_cast<double>(all);
    }
};

struct Decision {
    bool yes = false;
    std::vector<sum_t> witness; // nonempty iff yes; sums exactly to target
    SolveStats stats;
};

} // namespace binsum
