#include "dt/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dt/errors.hpp"
#include "dt/numerics.hpp"
#include "dt/teissier.hpp"

namespace dt::est {

namespace {

constexpr double kThetaMax = 1e6;

FitResult boundary_result(Method method) {
    FitResult r;
    r.theta_hat = std::numeric_limits<double>::infinity();
    r.se = std::numeric_limits<double>::quiet_NaN();
    r.method = method;
    r.log_likelihood = 0.0;  // supremum: p_0 -> 1 as theta -> inf
    r.converged = false;
    r.iterations = 0;
    return r;
}

}  // namespace

bool FitResult::boundary() const { return !converged && std::isinf(theta_hat); }

double log_likelihood(const Dataset& data, double theta) {
    const DTParams p(theta);
    double acc = 0.0;
    for (auto y : data.values) acc += log_pmf(p, y);
    return acc;
}

double score(const Dataset& data, double theta) {
    if (!(theta > 1.0)) throw std::domain_error("score: theta must be > 1");
    const double lt = std::log(theta);
    double acc = 0.0;
    for (auto yi : data.values) {
        const double y = static_cast<double>(yi);
        const double t = std::exp(y * lt);    // theta^y
        const double w = -t * (theta - 1.0);  // theta^y - theta^(y+1)
        // E1 = exp(w), E2 = (y+1) theta^(y+1) - 1; the product is assembled
        // in log space so huge theta^y degrades to -inf instead of NaN.
        const double e1 = std::exp(w);
        const double e1e2 = std::exp(w + std::log(y + 1.0) + (y + 1.0) * lt) - e1;
        const double denom = -std::expm1(lt + w);  // 1 - theta*E1
        const double ypow = yi == 0 ? 0.0 : std::exp(std::log(y) + (y - 1.0) * lt);
        acc += y / theta + (e1e2 - ypow) / denom;
    }
    return acc;
}

FitResult fit_mle(const Dataset& data) {
    if (data.all_zero()) return boundary_result(Method::MLE);

    int evals = 0;
    auto sc = [&](double th) {
        ++evals;
        return score(data, th);
    };

    double theta0 = 1.0 + 1.0 / (1.0 + data.mean());
    try {
        const FitResult mom = fit_mom(data);
        if (mom.converged) theta0 = mom.theta_hat;
    } catch (const std::exception&) {
        // fall back to the mean-based start
    }

    double lo = theta0, hi = theta0;
    double slo = sc(theta0), shi = slo;
    if (slo > 0.0) {
        do {
            lo = hi;
            slo = shi;
            hi = 1.0 + 2.0 * (hi - 1.0);
            if (hi > kThetaMax)
                throw NonConvergenceError("fit_mle: no score sign change below theta = 1e6");
            shi = sc(hi);
        } while (shi > 0.0);
    } else if (slo < 0.0) {
        do {
            hi = lo;
            shi = slo;
            lo = 1.0 + 0.5 * (lo - 1.0);
            if (lo - 1.0 < 1e-14)
                throw NonConvergenceError("fit_mle: score stays negative as theta -> 1");
            slo = sc(lo);
        } while (slo < 0.0);
    }

    const double xtol = 1e-14 * std::max(1.0, hi);
    const double theta_hat =
        slo == 0.0   ? lo
        : shi == 0.0 ? hi
                     : num::find_root(sc, num::RootBracket(lo, hi, slo, shi), xtol);

    FitResult r;
    r.method = Method::MLE;
    r.theta_hat = theta_hat;
    r.log_likelihood = log_likelihood(data, theta_hat);
    const double ll2 = num::second_derivative([&](double th) { return log_likelihood(data, th); },
                                              theta_hat, num::curvature_step(theta_hat));
    r.se = ll2 < 0.0 ? std::sqrt(-1.0 / ll2) : std::numeric_limits<double>::quiet_NaN();
    r.converged = true;
    r.iterations = evals;
    return r;
}

FitResult fit_mom(const Dataset& data) {
    const double ybar = data.pre_rounding_mean();
    if (ybar <= 0.0) return boundary_result(Method::MOM);

    int evals = 0;
    auto residual = [&](double th) {
        ++evals;
        return raw_moment(DTParams(th), 1) - ybar;
    };

    // The population mean is strictly decreasing in theta and close to
    // 1/ln(theta) - 1/2, which places the initial bracket.
    double lo = std::exp(1.0 / (ybar + 2.0));
    double glo = residual(lo);
    while (glo <= 0.0) {
        lo = 1.0 + 0.5 * (lo - 1.0);
        if (lo - 1.0 < 1e-14)
            throw NonConvergenceError("fit_mom: population mean stays below ybar");
        glo = residual(lo);
    }
    double hi = std::exp(1.0 / std::max(ybar - 2.0, 0.2));
    if (hi <= lo) hi = 1.0 + 2.0 * (lo - 1.0);
    double ghi = residual(hi);
    while (ghi >= 0.0) {
        hi = 1.0 + 2.0 * (hi - 1.0);
        if (hi > kThetaMax)
            throw NonConvergenceError("fit_mom: no root below theta = 1e6");
        ghi = residual(hi);
    }

    const double xtol = 1e-13 * std::max(1.0, hi);
    const double theta_hat = glo == 0.0   ? lo
                             : ghi == 0.0 ? hi
                                          : num::find_root(residual,
                                                           num::RootBracket(lo, hi, glo, ghi), xtol);

    FitResult r;
    r.method = Method::MOM;
    r.theta_hat = theta_hat;
    r.log_likelihood = log_likelihood(data, theta_hat);

    const DTParams p(theta_hat);
    const double m1 = raw_moment(p, 1);
    const double var = raw_moment(p, 2) - m1 * m1;
    const double dmu = num::central_derivative([](double th) { return raw_moment(DTParams(th), 1); },
                                               theta_hat, num::curvature_step(theta_hat));
    r.se = std::sqrt(var / static_cast<double>(data.size())) / std::fabs(dmu);
    r.converged = true;
    r.iterations = evals;
    return r;
}

}  // namespace dt::est
