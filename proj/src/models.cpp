#include "dt/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dt/estimation.hpp"
#include "dt/numerics.hpp"
#include "dt/teissier.hpp"

namespace dt::models {

namespace {

using num::log1mexp;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double d(std::int64_t y) { return static_cast<double>(y); }

// ---- discrete Teissier (delegates to the dt core) ----

double dt_log_pmf(const std::vector<double>& v, std::int64_t y) {
    return dt::log_pmf(dt::DTParams(v[0]), y);
}
double dt_cdf(const std::vector<double>& v, std::int64_t y) {
    return dt::cdf(dt::DTParams(v[0]), y);
}
std::array<double, 2> dt_init(const est::Dataset& data) {
    return {1.0 + 1.0 / (1.0 + data.mean()), 0.0};
}

// ---- geometric: p_y = (1-q) q^y ----

double geo_log_pmf(const std::vector<double>& v, std::int64_t y) {
    return std::log1p(-v[0]) + d(y) * std::log(v[0]);
}
double geo_cdf(const std::vector<double>& v, std::int64_t y) {
    if (y < 0) return 0.0;
    return -std::expm1(d(y + 1) * std::log(v[0]));
}
std::array<double, 2> geo_init(const est::Dataset& data) {
    const double m = data.mean();
    return {std::clamp(m / (1.0 + m), 1e-9, 1.0 - 1e-9), 0.0};
}

// ---- discrete Rayleigh: S(y) = theta^(y^2) ----

double dr_log_pmf(const std::vector<double>& v, std::int64_t y) {
    const double lt = std::log(v[0]);
    return d(y) * d(y) * lt + log1mexp(d(2 * y + 1) * lt);
}
double dr_cdf(const std::vector<double>& v, std::int64_t y) {
    if (y < 0) return 0.0;
    return -std::expm1(d(y + 1) * d(y + 1) * std::log(v[0]));
}
std::array<double, 2> dr_init(const est::Dataset& data) {
    const double m = std::max(data.mean(), 0.5);
    return {std::exp(std::log(0.5) / (m * m)), 0.0};
}

// ---- discrete Weibull: S(y) = q^(y^beta) ----

double dw_log_pmf(const std::vector<double>& v, std::int64_t y) {
    const double lq = std::log(v[0]);
    const double a = std::pow(d(y), v[1]);
    const double b = std::pow(d(y + 1), v[1]);
    return a * lq + log1mexp((b - a) * lq);
}
double dw_cdf(const std::vector<double>& v, std::int64_t y) {
    if (y < 0) return 0.0;
    return -std::expm1(std::pow(d(y + 1), v[1]) * std::log(v[0]));
}
std::array<double, 2> dw_init(const est::Dataset& data) {
    std::size_t nonzero = 0;
    for (auto y : data.values) nonzero += y >= 1;
    const double q0 = std::clamp(d(nonzero) / d(data.size()), 0.01, 0.99);
    return {q0, 1.0};
}

// ---- discrete Burr XII: S(y) = alpha^ln(1 + y^beta) ----

double dbr_log_pmf(const std::vector<double>& v, std::int64_t y) {
    const double la = std::log(v[0]);
    const double u0 = std::log1p(std::pow(d(y), v[1]));
    const double u1 = std::log1p(std::pow(d(y + 1), v[1]));
    return u0 * la + log1mexp((u1 - u0) * la);
}
double dbr_cdf(const std::vector<double>& v, std::int64_t y) {
    if (y < 0) return 0.0;
    return -std::expm1(std::log1p(std::pow(d(y + 1), v[1])) * std::log(v[0]));
}
std::array<double, 2> dbr_init(const est::Dataset&) { return {0.5, 1.0}; }

// ---- discrete Pareto: S(y) = theta^ln(1+y) ----

double dpa_log_pmf(const std::vector<double>& v, std::int64_t y) {
    const double lt = std::log(v[0]);
    const double u0 = std::log1p(d(y));
    const double u1 = std::log1p(d(y + 1));
    return u0 * lt + log1mexp((u1 - u0) * lt);
}
double dpa_cdf(const std::vector<double>& v, std::int64_t y) {
    if (y < 0) return 0.0;
    return -std::expm1(std::log1p(d(y + 1)) * std::log(v[0]));
}
std::array<double, 2> dpa_init(const est::Dataset&) { return {0.5, 0.0}; }

// ---- discrete Lindley: survival-discretized Lindley with lambda = e^-tc,
//      p_y = lambda^y [(1-lambda)(1 + tc*y) + tc(1-2*lambda)] / (1+tc) ----

double dsli_log_pmf(const std::vector<double>& v, std::int64_t y) {
    const double lambda = v[0];
    const double tc = -std::log(lambda);
    const double bracket = (1.0 - lambda) * (1.0 + tc * d(y)) + tc * (1.0 - 2.0 * lambda);
    if (!(bracket > 0.0)) return -kInf;
    return d(y) * std::log(lambda) + std::log(bracket) - std::log1p(tc);
}
double dsli_cdf(const std::vector<double>& v, std::int64_t y) {
    if (y < 0) return 0.0;
    const double tc = -std::log(v[0]);
    const double x = d(y + 1);
    // S_c(x) = (1 + tc + tc*x) e^(-tc*x) / (1 + tc)
    return 1.0 - (1.0 + tc + tc * x) * std::exp(-tc * x) / (1.0 + tc);
}
std::array<double, 2> dsli_init(const est::Dataset& data) {
    const double m = data.mean();
    return {std::clamp(m / (1.0 + m), 1e-9, 1.0 - 1e-9), 0.0};
}

// ---- discrete Poisson-Lindley: p_y = t^2 (y + t + 2) / (t+1)^(y+3) ----

double dpl_log_pmf(const std::vector<double>& v, std::int64_t y) {
    const double t = v[0];
    return 2.0 * std::log(t) + std::log(d(y) + t + 2.0) - d(y + 3) * std::log1p(t);
}
double dpl_cdf(const std::vector<double>& v, std::int64_t y) {
    if (y < 0) return 0.0;
    const double t = v[0];
    const double x = 1.0 / (1.0 + t);
    const double tail = std::exp(-d(y + 1) * std::log1p(t)) *
                        ((d(y + 1) - d(y) * x) / (t + 1.0) + t * (t + 2.0) / ((t + 1.0) * (t + 1.0)));
    return 1.0 - tail;
}
std::array<double, 2> dpl_init(const est::Dataset& data) {
    return {std::clamp(2.0 / std::max(data.mean(), 0.05), 1e-7, 1e3), 0.0};
}

const ParamDomain kUnit{1e-12, 1.0 - 1e-12, false};
const ParamDomain kShape{0.05, 64.0, false};
const ParamDomain kNone{0.0, 0.0, false};

}  // namespace

const std::vector<ModelSpec>& all_models() {
    static const std::vector<ModelSpec> models = {
        {"dt", "DT", 1, {ParamDomain{1.0, 1e6, false}, kNone}, dt_log_pmf, dt_cdf, dt_init},
        {"dw", "DW", 2, {kUnit, kShape}, dw_log_pmf, dw_cdf, dw_init},
        {"dr", "DR", 1, {kUnit, kNone}, dr_log_pmf, dr_cdf, dr_init},
        {"geo", "Geo", 1, {kUnit, kNone}, geo_log_pmf, geo_cdf, geo_init},
        {"dpa", "DPa", 1, {kUnit, kNone}, dpa_log_pmf, dpa_cdf, dpa_init},
        {"dbr", "DBr", 2, {kUnit, kShape}, dbr_log_pmf, dbr_cdf, dbr_init},
        {"dsli", "DsLi", 1, {kUnit, kNone}, dsli_log_pmf, dsli_cdf, dsli_init},
        {"dpl", "DPL", 1, {ParamDomain{1e-8, 1e4, true}, kNone}, dpl_log_pmf, dpl_cdf, dpl_init},
    };
    return models;
}

const ModelSpec* find_model(std::string_view name) {
    for (const auto& m : all_models())
        if (m.name == name) return &m;
    return nullptr;
}

void validate_params(const ModelSpec& model, const GenericParams& params) {
    if (static_cast<int>(params.values.size()) != model.param_count)
        throw std::domain_error(model.name + ": expected " + std::to_string(model.param_count) +
                                " parameter(s)");
    for (int i = 0; i < model.param_count; ++i) {
        const double v = params.values[i];
        const auto& dom = model.domain[i];
        if (!std::isfinite(v) || !(v > dom.lo) || !(v < dom.hi))
            throw std::domain_error(model.name + ": parameter " + std::to_string(i + 1) +
                                    " outside its domain");
    }
}

double pmf_generic(const ModelSpec& model, const GenericParams& params, std::int64_t y) {
    validate_params(model, params);
    if (y < 0) throw std::domain_error("pmf_generic: y must be >= 0");
    return std::exp(model.log_pmf(params.values, y));
}

double cdf_generic(const ModelSpec& model, const GenericParams& params, std::int64_t y) {
    validate_params(model, params);
    return model.cdf(params.values, y);
}

double log_likelihood_generic(const ModelSpec& model, const GenericParams& params,
                              const est::Dataset& data) {
    validate_params(model, params);
    double acc = 0.0;
    for (auto y : data.values) acc += model.log_pmf(params.values, y);
    return acc;
}

namespace {

double coord_to_opt(const ParamDomain& dom, double x) { return dom.log_scale ? std::log(x) : x; }
double opt_to_coord(const ParamDomain& dom, double s) { return dom.log_scale ? std::exp(s) : s; }

GenericFit fit_dt(const est::Dataset& data) {
    const est::FitResult r = est::fit_mle(data);
    GenericFit g;
    g.params = {r.theta_hat};
    g.ses = {r.se};
    g.log_likelihood = r.log_likelihood;
    g.converged = r.converged;
    g.iterations = r.iterations;
    return g;
}

}  // namespace

GenericFit fit_generic(const ModelSpec& model, const est::Dataset& data) {
    if (model.name == "dt") return fit_dt(data);

    int evals = 0;
    auto neg_ll = [&](const std::vector<double>& v) {
        ++evals;
        double acc = 0.0;
        for (auto y : data.values) acc += model.log_pmf(v, y);
        return std::isnan(acc) ? kInf : -acc;
    };

    const auto start = model.init(data);
    std::vector<double> p(start.begin(), start.begin() + model.param_count);

    constexpr double kCoordTol = 1e-12;
    const int k = model.param_count;

    // Work in optimizer space (ln-parameter where the domain says so).
    std::vector<double> s(k), s_lo(k), s_hi(k);
    for (int i = 0; i < k; ++i) {
        s[i] = coord_to_opt(model.domain[i], p[i]);
        s_lo[i] = coord_to_opt(model.domain[i], model.domain[i].lo);
        s_hi[i] = coord_to_opt(model.domain[i], model.domain[i].hi);
    }
    auto nll_at = [&](const std::vector<double>& sv) {
        std::vector<double> v(k);
        for (int i = 0; i < k; ++i) v[i] = opt_to_coord(model.domain[i], sv[i]);
        return neg_ll(v);
    };

    double prev_nll = nll_at(s);
    const int max_sweeps = k == 1 ? 1 : 200;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const std::vector<double> s_start = s;
        for (int i = 0; i < k; ++i) {
            auto slice = [&](double x) {
                std::vector<double> sv = s;
                sv[i] = x;
                return nll_at(sv);
            };
            s[i] = num::minimize_golden(slice, s_lo[i], s_hi[i], kCoordTol);
        }

        // Coordinate-wise passes zig-zag along correlated likelihood ridges;
        // a line search along the net sweep direction cuts across the ridge.
        if (k > 1) {
            std::vector<double> dir(k);
            bool moved = false;
            for (int i = 0; i < k; ++i) {
                dir[i] = s[i] - s_start[i];
                moved |= dir[i] != 0.0;
            }
            if (moved) {
                double t_lo = -8.0, t_hi = 8.0;
                for (int i = 0; i < k; ++i) {
                    if (dir[i] == 0.0) continue;
                    const double a = (s_lo[i] - s[i]) / dir[i];
                    const double b = (s_hi[i] - s[i]) / dir[i];
                    t_lo = std::max(t_lo, std::min(a, b));
                    t_hi = std::min(t_hi, std::max(a, b));
                }
                if (t_lo < t_hi) {
                    auto along = [&](double t) {
                        std::vector<double> sv(k);
                        for (int i = 0; i < k; ++i) sv[i] = s[i] + t * dir[i];
                        return nll_at(sv);
                    };
                    const double t = num::minimize_golden(along, t_lo, t_hi,
                                                          1e-10 * (t_hi - t_lo));
                    if (along(t) < nll_at(s))
                        for (int i = 0; i < k; ++i) s[i] += t * dir[i];
                }
            }
        }

        const double cur = nll_at(s);
        if (std::fabs(prev_nll - cur) < 1e-10) {
            prev_nll = cur;
            break;
        }
        prev_nll = cur;
    }
    for (int i = 0; i < k; ++i) p[i] = opt_to_coord(model.domain[i], s[i]);

    GenericFit g;
    g.params = p;
    g.log_likelihood = -prev_nll;
    g.iterations = evals;

    // A maximizer glued to the search boundary is a degenerate fit, not a
    // converged interior estimate.
    g.converged = true;
    for (int i = 0; i < model.param_count; ++i) {
        const auto& dom = model.domain[i];
        const double span = coord_to_opt(dom, dom.hi) - coord_to_opt(dom, dom.lo);
        const double s = coord_to_opt(dom, p[i]);
        if (s - coord_to_opt(dom, dom.lo) < 1e-8 * span || coord_to_opt(dom, dom.hi) - s < 1e-8 * span)
            g.converged = false;
    }

    g.ses.assign(p.size(), kNan);
    for (int i = 0; i < model.param_count; ++i) {
        const auto& dom = model.domain[i];
        const double gap = 0.5 * std::min(p[i] - dom.lo, dom.hi - p[i]);
        const double h = std::min(num::curvature_step(p[i]), gap);
        if (!(h > 0.0)) continue;
        auto ll_i = [&](double x) {
            std::vector<double> v = p;
            v[i] = x;
            return -neg_ll(v);
        };
        const double d2 = num::second_derivative(ll_i, p[i], h);
        if (d2 < 0.0) g.ses[i] = std::sqrt(-1.0 / d2);
    }
    return g;
}

}  // namespace dt::models
