#pragma once

#include "dt/dataset.hpp"

namespace dt::est {

enum class Method { MLE, MOM };

struct FitResult {
    double theta_hat;
    double se;
    Method method;
    double log_likelihood;
    bool converged;  // false for boundary (degenerate-data) reports
    int iterations;

    bool boundary() const;
};

// log L = n + n*ybar*log(theta) + sum_i log(exp(-theta^y_i) - theta exp(-theta^(y_i+1))),
// evaluated as sum_i log_pmf(y_i) in the stable log-space form.
double log_likelihood(const Dataset& data, double theta);

// d(log L)/d(theta), derived analytically from the stable form. Agrees with
// central finite differences of log_likelihood to 1e-6 relative.
double score(const Dataset& data, double theta);

// Maximum likelihood: brackets the score sign change on (1, 1e6] and solves
// with the safeguarded root finder; se = sqrt(-1 / LL''(theta_hat)) from the
// observed information. All-zero data have no interior maximizer (p_0 -> 1
// as theta -> inf) and are reported as a boundary result, converged = false.
FitResult fit_mle(const Dataset& data);

// Method of moments: solves ybar = sum_{i>=1} theta^i exp(1 - theta^i) for
// theta, using the pre-rounding sample mean when the dataset carries raw
// values. se by the delta method, sqrt(Var(Y; theta_hat)/n) / |dmu/dtheta|.
FitResult fit_mom(const Dataset& data);

}  // namespace dt::est
