#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

namespace dt::num {

// log(1 - exp(x)) for x <= 0, switching forms at -ln2 to keep precision at
// both ends. Returns -inf when x rounds up to 0 or above.
inline double log1mexp(double x) {
    if (x >= 0.0) return -std::numeric_limits<double>::infinity();
    return x > -0.6931471805599453 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

// Truncation policy for convergent infinite series: accumulate terms in
// ascending index order and stop at the first index past `min_terms` whose
// term magnitude falls below `abs_tol`. The floor guards against series
// whose terms plateau near 1 before their super-exponential decay kicks in
// (theta close to 1 needs thousands of near-unit terms before the tail).
struct SeriesSpec {
    std::function<double(std::int64_t)> term;
    double abs_tol = 1e-15;
    std::int64_t max_terms = 10'000'000;
    std::int64_t min_terms = 64;
    std::int64_t start = 1;
};

// Compensated (Kahan) sum of the series described by `spec`.
// Throws NonConvergenceError if max_terms is exhausted first.
double sum_series(const SeriesSpec& spec);

// A sign-changing bracket. Construction validates lo < hi and
// sign(f_lo) != sign(f_hi); an endpoint evaluating exactly to zero counts
// as a valid (degenerate) bracket.
struct RootBracket {
    double lo, hi, f_lo, f_hi;
    RootBracket(double lo, double hi, double f_lo, double f_hi);
    static RootBracket evaluate(const std::function<double(double)>& f, double lo, double hi);
};

// Bisection safeguarded with secant (Newton-style) steps: the accelerated
// step is taken only when it lands strictly inside the current bracket,
// otherwise the interval is bisected. Returns x with the final bracket
// width < xtol. Deterministic for fixed inputs.
double find_root(const std::function<double(double)>& f, RootBracket bracket, double xtol);

// Golden-section minimization of a unimodal f on [lo, hi] to width xtol.
double minimize_golden(const std::function<double(double)>& f, double lo, double hi, double xtol);

// Central differences. Callers pick h relative to |x|; the observed-information
// step used throughout fitting is 1e-5 * max(1, |x|).
double second_derivative(const std::function<double(double)>& f, double x, double h);
double central_derivative(const std::function<double(double)>& f, double x, double h);

inline double curvature_step(double x) {
    double ax = x < 0 ? -x : x;
    return 1e-5 * (ax > 1.0 ? ax : 1.0);
}

}  // namespace dt::num
