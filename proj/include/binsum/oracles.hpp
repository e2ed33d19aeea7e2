#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "binsum/types.hpp"

namespace binsum {

/// Reference deciders for cross-validation. These share no code or data
/// structures with the solver.
struct OracleResult {
    bool yes = false;
    std::vector<sum_t> witness; // nonempty iff yes
};

/// Classic reachable-sum table, one row, sums iterated descending per value so
/// no value is used twice. maker[x] records which value first reached x.
inline OracleResult bellman_decide(std::span<const sum_t> values, sum_t target) {
    BINSUM_CHECK(target >= 1, "bellman: target must be >= 1");
    std::vector<std::int32_t> maker(static_cast<std::size_t>(target) + 1, -1);
    maker[0] = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum_t v = values[i];
        BINSUM_CHECK(v >= 1, "bellman: values must be >= 1");
        if (v > target) continue;
        for (sum_t x = target; x >= v; --x) {
            if (maker[static_cast<std::size_t>(x)] == -1 &&
                maker[static_cast<std::size_t>(x - v)] != -1)
                maker[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(i) + 1;
        }
        if (maker[static_cast<std::size_t>(target)] != -1) break;
    }
    OracleResult r;
    if (maker[static_cast<std::size_t>(target)] == -1) return r;
    r.yes = true;
    for (sum_t x = target; x > 0;) {
        std::int32_t i = maker[static_cast<std::size_t>(x)];
        r.witness.push_back(values[static_cast<std::size_t>(i - 1)]);
        x -= values[static_cast<std::size_t>(i - 1)];
    }
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Meet in the middle: enumerate both halves' subset sums, sort one side and
/// search complements. Guarded to n <= 44 (2^(n/2) half subsets).
inline OracleResult hs_decide(std::span<const sum_t> values, sum_t target) {
    BINSUM_CHECK(target >= 1, "hs: target must be >= 1");
    if (values.size() > 44)
        throw OracleError("hs_decide: instance too large for meet-in-the-middle (n > 44)");

    std::size_t half = values.size() / 2;
    auto enumerate = [&](std::size_t lo, std::size_t hi) {
        std::vector<std::pair<sum_t, std::uint32_t>> sums;
        sums.reserve(std::size_t{1} << (hi - lo));
        sums.emplace_back(0, 0);
        for (std::size_t i = lo; i < hi; ++i) {
            std::size_t n = sums.size();
            for (std::size_t s = 0; s < n; ++s) {
                sum_t total = sums[s].first + values[i];
                if (total > target) continue;
                sums.emplace_back(total, sums[s].second | (1u << (i - lo)));
            }
        }
        return sums;
    };

    auto left = enumerate(0, half);
    auto right = enumerate(half, values.size());
    std::sort(left.begin(), left.end());

    OracleResult r;
    for (const auto& [rsum, rmask] : right) {
        sum_t want = target - rsum;
        auto it = std::lower_bound(left.begin(), left.end(), std::pair<sum_t, std::uint32_t>{want, 0});
        if (it == left.end() || it->first != want) continue;
        r.yes = true;
        for (std::size_t i = 0; i < half; ++i)
            if (it->second & (1u << i)) r.witness.push_back(values[i]);
        for (std::size_t i = half; i < values.size(); ++i)
            if (rmask & (1u << (i - half))) r.witness.push_back(values[i]);
        std::sort(r.witness.begin(), r.witness.end());
        return r;
    }
    return r;
}

} // namespace binsum
