#include "dt/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dt::gof {

InfoCriteria information_criteria(double neg_ll, int k, int n) {
    if (n <= k + 1) throw std::domain_error("information_criteria: need n > k + 1");
    InfoCriteria ic;
    ic.aic = 2.0 * k + 2.0 * neg_ll;
    ic.bic = k * std::log(static_cast<double>(n)) + 2.0 * neg_ll;
    ic.caic = ic.aic + 2.0 * k * (k + 1.0) / (n - k - 1.0);
    return ic;
}

double kolmogorov_q(double t) {
    if (!(t > 0.0)) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (std::int64_t j = 1; j < 10'000'000; ++j) {
        const double term = std::exp(-2.0 * static_cast<double>(j) * static_cast<double>(j) * t * t);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-12) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(const est::Dataset& data, const std::function<double(std::int64_t)>& fitted_cdf) {
    std::vector<std::int64_t> sorted = data.values;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());

    double d_stat = 0.0;
    double prev_fit = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        const std::int64_t y = sorted[i];
        const double ecdf_below = static_cast<double>(i) / n;
        while (i < sorted.size() && sorted[i] == y) ++i;
        const double ecdf = static_cast<double>(i) / n;

        const double fit = fitted_cdf(y);
        if (fit < prev_fit - 1e-12 || fit < -1e-9 || fit > 1.0 + 1e-9)
            throw std::domain_error("ks_test: fitted cdf is not a CDF on the observed range");
        prev_fit = fit;

        d_stat = std::max(d_stat, std::max(ecdf - fit, fit - ecdf_below));
    }
    return {d_stat, kolmogorov_q(std::sqrt(n) * d_stat)};
}

ComparisonTable compare_models(const est::Dataset& data, const std::vector<std::string>& names) {
    if (names.empty()) throw std::invalid_argument("compare_models: need at least one model");

    ComparisonTable table;
    for (const auto& name : names) {
        const models::ModelSpec* spec = models::find_model(name);
        if (!spec) throw std::invalid_argument("compare_models: unknown model '" + name + "'");

        ComparisonRow row;
        row.model = spec->display_name;
        try {
            row.fit = models::fit_generic(*spec, data);
            if (!row.fit.converged) {
                row.error = "no interior optimum (boundary fit)";
            } else {
                const double neg_ll = -row.fit.log_likelihood;
                const InfoCriteria ic =
                    information_criteria(neg_ll, spec->param_count, static_cast<int>(data.size()));
                const models::GenericParams fitted{row.fit.params};
                const KsResult ks = ks_test(
                    data, [&](std::int64_t y) { return models::cdf_generic(*spec, fitted, y); });
                row.report = {neg_ll,   ic.aic,    ic.bic,
                              ic.caic,  ks.stat,   ks.pvalue,
                              spec->param_count, static_cast<int>(data.size())};
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }

    std::sort(table.rows.begin(), table.rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
        if (a.failed() != b.failed()) return !a.failed();
        if (a.failed()) return a.model < b.model;
        if (a.report.aic != b.report.aic) return a.report.aic < b.report.aic;
        if (a.report.bic != b.report.bic) return a.report.bic < b.report.bic;
        return a.model < b.model;
    });
    return table;
}

}  // namespace dt::gof
