#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dt/dataset.hpp"

namespace dt::models {

// Open parameter interval used both for validation and as the search range
// of the likelihood optimizer; log_scale optimizes on the ln-parameter.
struct ParamDomain {
    double lo, hi;
    bool log_scale = false;
};

struct ModelSpec {
    std::string name;          // identifier used by the CLI ("geo", "dw", ...)
    std::string display_name;  // table label ("Geo", "DW", ...)
    int param_count;
    std::array<ParamDomain, 2> domain;
    double (*log_pmf)(const std::vector<double>&, std::int64_t);
    double (*cdf)(const std::vector<double>&, std::int64_t);
    std::array<double, 2> (*init)(const est::Dataset&);
};

struct GenericParams {
    std::vector<double> values;
};

struct GenericFit {
    std::vector<double> params;
    std::vector<double> ses;
    double log_likelihood;
    bool converged;
    int iterations;
};

// The shared-interface model set: the discrete Teissier law ("dt") plus the
// seven survival-discretized classics compared against it. Geometric,
// discrete Rayleigh (S(y) = theta^(y^2)), discrete Weibull (S(y) = q^(y^beta)),
// discrete Burr XII (S(y) = alpha^ln(1+y^beta)), discrete Pareto
// (S(y) = theta^ln(1+y)), discrete Lindley, and discrete Poisson-Lindley,
// all with support 0, 1, 2, ... and S(y) = P(Y >= y) conventions as in their
// source papers.
const std::vector<ModelSpec>& all_models();
const ModelSpec* find_model(std::string_view name);  // nullptr if unknown

void validate_params(const ModelSpec& model, const GenericParams& params);
double pmf_generic(const ModelSpec& model, const GenericParams& params, std::int64_t y);
double cdf_generic(const ModelSpec& model, const GenericParams& params, std::int64_t y);
double log_likelihood_generic(const ModelSpec& model, const GenericParams& params,
                              const est::Dataset& data);

// Maximum likelihood for any registered model: golden-section search on the
// profile for one parameter, coordinate-wise alternation (LL change below
// 1e-10) for two. "dt" delegates to est::fit_mle. Standard errors come from
// the diagonal of the observed information by central differences. A fit
// that lands on the edge of the search domain is reported converged = false.
GenericFit fit_generic(const ModelSpec& model, const est::Dataset& data);

}  // namespace dt::models
