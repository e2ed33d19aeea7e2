#pragma once

// Test-only reference machinery: exhaustive 2^n enumeration, witness
// validation and small deterministic corpora. Deliberately independent of the
// solver's data structures.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "binsum/generators.hpp"
#include "binsum/types.hpp"

namespace brute {

using binsum::sum_t;

/// Every achievable nonempty subset sum <= cap, by literal 2^n enumeration.
inline std::set<sum_t> reachable_sums(const std::vector<sum_t>& values, sum_t cap) {
    std::set<sum_t> sums;
    std::size_t n = values.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        sum_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s += values[i];
        if (s <= cap) sums.insert(s);
    }
    return sums;
}

inline bool decide(const std::vector<sum_t>& values, sum_t target) {
    return reachable_sums(values, target).count(target) > 0;
}

/// True when witness sums to target and uses no value more often than the
/// instance provides it.
inline bool witness_valid(const std::vector<sum_t>& witness, const std::vector<sum_t>& values,
                          sum_t target) {
    sum_t sum = 0;
    std::map<sum_t, int> budget;
    for (sum_t v : values) ++budget[v];
    for (sum_t v : witness) {
        sum += v;
        if (--budget[v] < 0) return false;
    }
    return sum == target;
}

struct SmallCase {
    std::vector<sum_t> values;
    sum_t target;
};

/// Deterministic random small instances for cross-checks.
inline std::vector<SmallCase> random_cases(int count, int max_n, sum_t max_value,
                                           sum_t max_target, std::uint64_t seed) {
    binsum::SplitMix64 rng(seed);
    std::vector<SmallCase> cases;
    cases.reserve(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) {
        SmallCase sc;
        int n = static_cast<int>(rng.draw(max_n));
        for (int i = 0; i < n; ++i) sc.values.push_back(rng.draw(max_value));
        sc.target = rng.draw(max_target);
        cases.push_back(std::move(sc));
    }
    return cases;
}

} // namespace brute
