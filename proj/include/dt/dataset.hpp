#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dt::est {

// An ordered multiset of non-negative integer observations plus provenance:
// when the observations were produced by scale-and-floor preprocessing the
// raw values and the divisor are kept alongside.
struct Dataset {
    std::vector<std::int64_t> values;
    std::optional<std::vector<double>> raw_values;
    std::optional<double> scale_floor_divisor;

    static Dataset from_values(std::vector<std::int64_t> values);
    // values[i] = floor(raw[i] / divisor)
    static Dataset from_raw(std::vector<double> raw, double divisor);

    std::size_t size() const { return values.size(); }

    // Mean of the modeling values.
    double mean() const;

    // Mean of the scaled values before flooring, when raw values are
    // present; otherwise identical to mean().
    double pre_rounding_mean() const;

    bool all_zero() const;
};

}  // namespace dt::est
