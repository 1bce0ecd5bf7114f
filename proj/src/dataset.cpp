#include "dt/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace dt::est {

namespace {

void check_values(const std::vector<std::int64_t>& values) {
    if (values.empty()) throw std::domain_error("Dataset: values must be non-empty");
    for (auto v : values)
        if (v < 0) throw std::domain_error("Dataset: values must be non-negative");
}

}  // namespace

Dataset Dataset::from_values(std::vector<std::int64_t> values) {
    check_values(values);
    Dataset d;
    d.values = std::move(values);
    return d;
}

Dataset Dataset::from_raw(std::vector<double> raw, double divisor) {
    if (!(divisor > 0.0)) throw std::domain_error("Dataset: divisor must be > 0");
    Dataset d;
    d.values.reserve(raw.size());
    for (double x : raw) {
        if (!(x >= 0.0)) throw std::domain_error("Dataset: raw values must be non-negative");
        d.values.push_back(static_cast<std::int64_t>(std::floor(x / divisor)));
    }
    check_values(d.values);
    d.raw_values = std::move(raw);
    d.scale_floor_divisor = divisor;
    return d;
}

double Dataset::mean() const {
    double s = 0.0;
    for (auto v : values) s += static_cast<double>(v);
    return s / static_cast<double>(values.size());
}

double Dataset::pre_rounding_mean() const {
    if (!raw_values) return mean();
    double s = 0.0;
    for (double x : *raw_values) s += x;
    return s / (static_cast<double>(raw_values->size()) * scale_floor_divisor.value_or(1.0));
}

bool Dataset::all_zero() const {
    for (auto v : values)
        if (v != 0) return false;
    return true;
}

}  // namespace dt::est
