#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace binsum {

// Sums, values and targets. Arithmetic stays in 64 bits; per-sum storage
// (creator indices, list links) is 32-bit, which bounds the target below.
using sum_t = std::int64_t;
using value_index_t = std::int32_t;

// Largest accepted target: creator/link arrays index sums 0..T+1 as int32.
inline constexpr sum_t max_target = 2147483644;

// Internal-fault check. Stays on in release builds: a failure here means a
// broken state invariant, and continuing would silently corrupt results.
#define BINSUM_CHECK(cond, msg)                                                \
    do {                                                                       \
        if (!(cond)) {                                                         \
            std::fprintf(stderr, "binsum: internal fault: %s (%s:%d)\n", msg,  \
                         __FILE__, __LINE__);                                  \
            std::abort();                                                      \
        }                                                                      \
    } while (0)

class IngestError : public std::runtime_error {
public:
    enum class Kind { EmptyInput, NonPositiveValue, NonPositiveTarget, TargetTooLarge };

    IngestError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline sum_t ceil_div(sum_t a, sum_t b) { return (a + b - 1) / b; }

} // namespace binsum
