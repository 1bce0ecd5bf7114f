#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dt/dataset.hpp"
#include "dt/models.hpp"

namespace dt::gof {

// Model-selection measures for one fitted model on one data set. The
// identities aic = 2k + 2*neg_ll, bic = k ln(n) + 2*neg_ll and
// caic = aic + 2k(k+1)/(n-k-1) hold exactly.
struct GofReport {
    double neg_ll;
    double aic;
    double bic;
    double caic;
    double ks_stat;
    double ks_pvalue;
    int k;  // parameter count
    int n;  // sample size
};

struct InfoCriteria {
    double aic, bic, caic;
};

// Requires n > k + 1 (CAIC denominator).
InfoCriteria information_criteria(double neg_ll, int k, int n);

struct KsResult {
    double stat;
    double pvalue;
};

// Two-sided Kolmogorov-Smirnov distance over the distinct observed values:
// D = max_y max(F_emp(y) - F_fit(y), F_fit(y) - F_emp(y-)), the convention
// of the standard one-sample test applied to the step empirical CDF.
// p-value from the asymptotic Kolmogorov series
// Q(t) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 t^2) at t = sqrt(n) D,
// truncated at |term| < 1e-12, with no estimation adjustment.
KsResult ks_test(const est::Dataset& data, const std::function<double(std::int64_t)>& fitted_cdf);

// The asymptotic tail Q(t) above; Q(0) = 1.
double kolmogorov_q(double t);

struct ComparisonRow {
    std::string model;  // display name
    models::GenericFit fit;
    GofReport report;
    std::string error;  // non-empty marks a failed fit; fit/report unusable
    bool failed() const { return !error.empty(); }
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
};

// Fits every named model by maximum likelihood and reports the table sorted
// by AIC ascending (ties by BIC, then name). Models that fail to fit are
// kept as failed rows at the bottom rather than failing the table.
ComparisonTable compare_models(const est::Dataset& data, const std::vector<std::string>& names);

}  // namespace dt::gof
