#pragma once

#include <algorithm>
#include <vector>

#include "binsum/types.hpp"

namespace binsum {

/// A decision-problem instance: positive integer values and a positive target.
/// After ingest the values are sorted ascending and every retained value is
/// <= target (a larger value can never be part of an exact positive sum).
struct Instance {
    std::vector<sum_t> values;
    sum_t target = 0;
    std::int64_t input_count = 0; // values as given, before dropping
    std::int64_t dropped = 0;     // values > target removed at ingest

    sum_t value_total() const {
        sum_t total = 0;
        for (sum_t v : values) total += v;
        return total;
    }
};

inline Instance ingest(std::vector<sum_t> values, sum_t target) {
    if (values.empty())
        throw IngestError(IngestError::Kind::EmptyInput, "ingest: empty value list");
    if (target < 1)
        throw IngestError(IngestError::Kind::NonPositiveTarget, "ingest: target must be >= 1");
    if (target > max_target)
        throw IngestError(IngestError::Kind::TargetTooLarge,
                          "ingest: target exceeds supported range");
    for (sum_t v : values)
        if (v < 1)
            throw IngestError(IngestError::Kind::NonPositiveValue,
                              "ingest: all values must be >= 1");

    Instance inst;
    inst.target = target;
    inst.input_count = static_cast<std::int64_t>(values.size());
    inst.values = std::move(values);
    std::erase_if(inst.values, [&](sum_t v) { return v > target; });
    inst.dropped = inst.input_count - static_cast<std::int64_t>(inst.values.size());
    std::sort(inst.values.begin(), inst.values.end());
    return inst;
}

} // namespace binsum
