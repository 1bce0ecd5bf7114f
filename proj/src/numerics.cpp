#include "dt/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dt/errors.hpp"

namespace dt::num {

double sum_series(const SeriesSpec& spec) {
    if (!(spec.abs_tol > 0.0)) throw std::invalid_argument("sum_series: abs_tol must be > 0");
    if (spec.max_terms < 1) throw std::invalid_argument("sum_series: max_terms must be >= 1");

    double sum = 0.0;
    double carry = 0.0;  // Kahan compensation
    for (std::int64_t k = 0; k < spec.max_terms; ++k) {
        const double t = spec.term(spec.start + k);
        const double y = t - carry;
        const double s = sum + y;
        carry = (s - sum) - y;
        sum = s;
        if (k + 1 >= spec.min_terms && std::fabs(t) < spec.abs_tol) return sum;
    }
    throw NonConvergenceError("sum_series: tolerance " + std::to_string(spec.abs_tol) +
                              " not reached within " + std::to_string(spec.max_terms) + " terms");
}

RootBracket::RootBracket(double lo_, double hi_, double f_lo_, double f_hi_)
    : lo(lo_), hi(hi_), f_lo(f_lo_), f_hi(f_hi_) {
    if (!(lo < hi)) throw InvalidBracketError("RootBracket: lo must be < hi");
    if (f_lo * f_hi > 0.0)
        throw InvalidBracketError("RootBracket: f(lo) and f(hi) have the same sign");
}

RootBracket RootBracket::evaluate(const std::function<double(double)>& f, double lo, double hi) {
    return RootBracket(lo, hi, f(lo), f(hi));
}

double find_root(const std::function<double(double)>& f, RootBracket b, double xtol) {
    if (!(xtol > 0.0)) throw std::invalid_argument("find_root: xtol must be > 0");
    if (b.f_lo == 0.0) return b.lo;
    if (b.f_hi == 0.0) return b.hi;

    double a = b.lo, fa = b.f_lo;
    double c = b.hi, fc = b.f_hi;
    double x = 0.5 * (a + c);

    const int max_iter = 200;
    for (int it = 0; it < max_iter; ++it) {
        // Secant proposal from the current bracket endpoints; fall back to
        // bisection when it degenerates or leaves the interval.
        double step = x;
        const double denom = fc - fa;
        if (denom != 0.0) step = a - fa * (c - a) / denom;
        if (!std::isfinite(step) || step <= a || step >= c) step = 0.5 * (a + c);

        // Force a bisection every other iteration so the interval provably
        // shrinks even when secant steps stall at one endpoint.
        if (it % 2 == 1) step = 0.5 * (a + c);

        // Interval no longer splittable at double resolution.
        if (step <= a || step >= c) return 0.5 * (a + c);

        x = step;
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (fa < 0.0)) {
            a = x;
            fa = fx;
        } else {
            c = x;
            fc = fx;
        }
        if (c - a < xtol) return 0.5 * (a + c);
    }
    throw NonConvergenceError("find_root: interval not reduced below xtol in " +
                              std::to_string(max_iter) + " iterations");
}

double minimize_golden(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    if (!(lo < hi)) throw std::invalid_argument("minimize_golden: lo must be < hi");
    if (!(xtol > 0.0)) throw std::invalid_argument("minimize_golden: xtol must be > 0");

    const double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    const int max_iter = 400;
    for (int it = 0; it < max_iter && b - a > xtol; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

double second_derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

double central_derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace dt::num
