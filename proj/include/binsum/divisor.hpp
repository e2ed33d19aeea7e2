#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "binsum/types.hpp"

namespace binsum {

struct DivisorConfig {
    int sample_size = 40;      // lowest distinct unprocessed values examined
    int limit = 20;            // minimum count for significance
    int limit_for_two = 32;    // divisor 2 needs broader support
    bool literal_inequality = false; // compatibility: reject counts above the limit instead
};

struct DivisorCandidate {
    sum_t d = 0;
    int count = 0; // chosen values divisible by d
    sum_t score() const { return d * static_cast<sum_t>(count); }
};

/// Find a significant shared divisor among the unprocessed values, if any.
///
/// Candidates are the pairwise GCDs of the lowest distinct values (reduced by
/// the previous divisor when one exists, so a selected divisor always divides
/// its predecessor). A candidate is significant when enough of the chosen
/// values are divisible by it; the winner maximises d * count, ties going to
/// the smaller divisor (larger count, broader coverage).
inline std::optional<DivisorCandidate> recognize_divisor(std::span<const sum_t> unprocessed,
                                                         sum_t previous_divisor,
                                                         const DivisorConfig& cfg = {}) {
    if (unprocessed.size() < 2) return std::nullopt;

    // unprocessed is sorted ascending; collect the lowest distinct values.
    std::vector<sum_t> chosen;
    chosen.reserve(static_cast<std::size_t>(cfg.sample_size));
    for (sum_t v : unprocessed) {
        if (!chosen.empty() && chosen.back() == v) continue;
        chosen.push_back(v);
        if (static_cast<int>(chosen.size()) >= cfg.sample_size) break;
    }
    if (chosen.size() < 2) return std::nullopt;

    std::vector<sum_t> candidates;
    for (std::size_t a = 0; a < chosen.size(); ++a) {
        for (std::size_t b = a + 1; b < chosen.size(); ++b) {
            sum_t d = std::gcd(chosen[a], chosen[b]);
            if (previous_divisor > 0) d = std::gcd(d, previous_divisor);
            if (d > 1) candidates.push_back(d);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::optional<DivisorCandidate> best;
    for (sum_t d : candidates) {
        int count = 0;
        for (sum_t v : chosen)
            if (v % d == 0) ++count;
        int limit = d == 2 ? cfg.limit_for_two : cfg.limit;
        bool significant = cfg.literal_inequality ? count <= limit : count >= limit;
        if (!significant) continue;
        DivisorCandidate cand{d, count};
        if (!best || cand.score() > best->score()) best = cand;
    }
    return best;
}

} // namespace binsum
