#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "binsum/types.hpp"

namespace binsum {

class GeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// splitmix64: the fixed generator behind every deterministic corpus here.
/// Identical seeds give identical instances on any platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [1, hi]; modulo mapping, bias immaterial here.
    sum_t draw(sum_t hi) {
        if (hi < 1) hi = 1;
        return static_cast<sum_t>(next() % static_cast<std::uint64_t>(hi)) + 1;
    }
};

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                              std::uint64_t c) {
    SplitMix64 rng(base ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL) ^
                   (c * 0x165667b19e3779f9ULL));
    return rng.next();
}

struct GeneratedInstance {
    std::vector<sum_t> values; // unsorted, as drawn
    sum_t target = 0;
};

/// The random experimental protocol: n values uniform in 1..T/4.
inline GeneratedInstance gen_random(std::int64_t n, sum_t target, std::uint64_t seed) {
    BINSUM_CHECK(n >= 1 && target >= 4, "gen_random: need n >= 1 and target >= 4");
    SplitMix64 rng(seed);
    GeneratedInstance out;
    out.target = target;
    out.values.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) out.values.push_back(rng.draw(target / 4));
    return out;
}

struct WorstCaseFamily {
    std::string_view id;
    std::string_view description;
};

/// Candidate worst-case families: divisor structure, repeats, dense/sparse
/// mixtures and low-efficiency lead-ins, each deterministic in the seed.
inline const std::vector<WorstCaseFamily>& worst_case_families() {
    static const std::vector<WorstCaseFamily> families = {
        {"even", "all values even"},
        {"bigdiv", "all values multiples of one large divisor"},
        {"twodiv", "two overlapping sets with different shared divisors"},
        {"repeat", "one value repeated n times"},
        {"pattern", "a short value pattern repeated"},
        {"cluster", "dense cluster of near-equal values plus sparse large ones"},
        {"lowe", "tiny values first, then structure-breaking large near-repeats"},
    };
    return families;
}

inline bool is_worst_case_family(std::string_view id) {
    for (const auto& f : worst_case_families())
        if (f.id == id) return true;
    return false;
}

inline GeneratedInstance gen_worst_case(std::string_view family, std::int64_t n, sum_t target,
                                        std::uint64_t seed) {
    BINSUM_CHECK(n >= 1 && target >= 16, "gen_worst_case: need n >= 1 and target >= 16");
    SplitMix64 rng(seed);
    GeneratedInstance out;
    out.target = target;
    out.values.reserve(static_cast<std::size_t>(n));
    sum_t quarter = std::max<sum_t>(target / 4, 2);

    if (family == "even") {
        for (std::int64_t i = 0; i < n; ++i) out.values.push_back(2 * rng.draw(quarter / 2));
    } else if (family == "bigdiv") {
        sum_t d = std::max<sum_t>(2, quarter / 64);
        for (std::int64_t i = 0; i < n; ++i) out.values.push_back(d * rng.draw(quarter / d));
    } else if (family == "twodiv") {
        for (std::int64_t i = 0; i < n; ++i) {
            sum_t d = (i % 2 == 0) ? 4 : 6;
            out.values.push_back(d * rng.draw(quarter / d));
        }
    } else if (family == "repeat") {
        sum_t v = rng.draw(quarter);
        out.values.assign(static_cast<std::size_t>(n), v);
    } else if (family == "pattern") {
        sum_t pattern[5];
        for (sum_t& p : pattern) p = rng.draw(quarter);
        for (std::int64_t i = 0; i < n; ++i) out.values.push_back(pattern[i % 5]);
    } else if (family == "cluster") {
        sum_t center = std::max<sum_t>(2, target / 100);
        sum_t spread = std::max<sum_t>(1, center / 50);
        for (std::int64_t i = 0; i < n; ++i) {
            if (i % 10 == 9)
                out.values.push_back(target / 8 + rng.draw(target / 8));
            else
                out.values.push_back(center + rng.draw(spread));
        }
    } else if (family == "lowe") {
        // Duplicate-heavy lead-in, then large near-repeats spaced so their
        // subset-sum shells stay sparse.
        sum_t base = std::max<sum_t>(2, target / 5);
        for (std::int64_t i = 0; i < n; ++i) {
            if (i % 5 < 3)
                out.values.push_back(rng.draw(16));
            else
                out.values.push_back(base + rng.draw(64));
        }
    } else {
        throw GeneratorError("gen_worst_case: unknown family '" + std::string(family) + "'");
    }
    return out;
}

inline GeneratedInstance gen_family(std::string_view family, std::int64_t n, sum_t target,
                                    std::uint64_t seed) {
    if (family == "random") return gen_random(n, target, seed);
    return gen_worst_case(family, n, target, seed);
}

} // namespace binsum
