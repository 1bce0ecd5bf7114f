#include "dt/teissier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dt/errors.hpp"
#include "dt/numerics.hpp"

namespace dt {

namespace {

using num::log1mexp;

// ln of the survival ratio S(y)/S(y-1) shifted by one step:
// r(y) = ln theta + theta^y - theta^(y+1), always < 0 for theta > 1.
double log_step_ratio(const DTParams& p, double theta_pow_y) {
    return p.log_theta - theta_pow_y * (p.theta - 1.0);
}

}  // namespace

DTParams::DTParams(double theta_) : theta(theta_), log_theta(std::log(theta_)) {
    if (!std::isfinite(theta_) || !(theta_ > 1.0))
        throw std::domain_error("DTParams: theta must be finite and > 1");
}

double log_pmf(const DTParams& p, std::int64_t y) {
    if (y < 0) throw std::domain_error("pmf: y must be >= 0");
    const double a = static_cast<double>(y) * p.log_theta;
    const double t = std::exp(a);  // theta^y, may overflow to inf
    return 1.0 + a - t + log1mexp(log_step_ratio(p, t));
}

double pmf(const DTParams& p, std::int64_t y) { return std::exp(log_pmf(p, y)); }

double log_sf(const DTParams& p, std::int64_t y) {
    if (y < 0) return 0.0;
    const double m = static_cast<double>(y + 1) * p.log_theta;
    return 1.0 + m - std::exp(m);
}

double sf(const DTParams& p, std::int64_t y) { return std::exp(log_sf(p, y)); }

double cdf(const DTParams& p, std::int64_t y) {
    if (y < 0) return 0.0;
    return -std::expm1(log_sf(p, y));
}

double hrf(const DTParams& p, std::int64_t y) {
    if (y < 0) throw std::domain_error("hrf: y must be >= 0");
    const double t = std::exp(static_cast<double>(y) * p.log_theta);
    const double r = log_step_ratio(p, t);
    return r >= 0.0 ? 0.0 : -std::expm1(r);
}

double rhrf(const DTParams& p, std::int64_t y) {
    if (y < 0) throw std::domain_error("rhrf: y must be >= 0");
    const double denom = cdf(p, y);
    if (denom <= 0.0) throw std::domain_error("rhrf: cdf(y) vanishes at this y");
    return pmf(p, y) / denom;
}

double srf(const DTParams& p, std::int64_t y) {
    if (y < 0) throw std::domain_error("srf: y must be >= 0");
    const double v = std::exp(static_cast<double>(y + 1) * p.log_theta);
    return v * (p.theta - 1.0) - p.log_theta;
}

namespace {

// y^r - (y-1)^r expanded so no large powers get cancelled.
double tail_coefficient(std::int64_t y, int r) {
    const double d = static_cast<double>(y);
    switch (r) {
        case 1: return 1.0;
        case 2: return 2.0 * d - 1.0;
        case 3: return 3.0 * d * (d - 1.0) + 1.0;
        case 4: return (2.0 * d - 1.0) * (2.0 * d * (d - 1.0) + 1.0);
        default: return 0.0;
    }
}

// P(Y >= y) in the continuous survival form, exp(1 + y ln theta - theta^y).
double tail_prob(const DTParams& p, std::int64_t y) {
    const double a = static_cast<double>(y) * p.log_theta;
    return std::exp(1.0 + a - std::exp(a));
}

}  // namespace

double raw_moment(const DTParams& p, int r) {
    if (r < 1 || r > 4) throw std::domain_error("raw_moment: order must be in [1,4]");
    num::SeriesSpec spec;
    spec.term = [&p, r](std::int64_t y) { return tail_coefficient(y, r) * tail_prob(p, y); };
    return num::sum_series(spec);
}

Descriptives descriptives(const DTParams& p) {
    const double m1 = raw_moment(p, 1);
    const double m2 = raw_moment(p, 2);
    const double m3 = raw_moment(p, 3);
    const double m4 = raw_moment(p, 4);
    const double var = m2 - m1 * m1;
    const double mu3 = m3 - 3.0 * m2 * m1 + 2.0 * m1 * m1 * m1;
    const double mu4 = m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1;
    Descriptives d;
    d.mean = m1;
    d.variance = var;
    d.skewness = mu3 / (var * std::sqrt(var));
    d.ex_kurtosis = mu4 / (var * var) - 3.0;
    d.iod = var / m1;
    d.cv = std::sqrt(var) / m1;
    return d;
}

double mgf(const DTParams& p, double t) {
    if (!std::isfinite(t)) throw std::domain_error("mgf: t must be finite");
    num::SeriesSpec spec;
    spec.term = [&p, t](std::int64_t y) {
        const double a = static_cast<double>(y) * p.log_theta;
        return std::exp(static_cast<double>(y - 1) * (p.log_theta + t) - std::exp(a));
    };
    const double s = num::sum_series(spec);
    return 1.0 + std::exp(1.0) * p.theta * std::expm1(t) * s;
}

RenyiOrder::RenyiOrder(double rho_) : rho(rho_) {
    if (!std::isfinite(rho_) || !(rho_ > 0.0) || rho_ == 1.0)
        throw std::domain_error("RenyiOrder: rho must be > 0 and != 1");
}

double renyi_entropy(const DTParams& p, RenyiOrder order) {
    num::SeriesSpec spec;
    spec.start = 0;
    spec.term = [&p, &order](std::int64_t y) { return std::exp(order.rho * log_pmf(p, y)); };
    return std::log(num::sum_series(spec)) / (1.0 - order.rho);
}

double mrl(const DTParams& p, std::int64_t i) {
    if (i < 0) throw std::domain_error("mrl: i must be >= 0");
    const double u_i = std::exp(static_cast<double>(i + 1) * p.log_theta);  // theta^(i+1)
    num::SeriesSpec spec;
    spec.start = i + 1;
    spec.term = [&p, i, u_i](std::int64_t j) {
        // S(j)/S(i) = theta^(j-i) * exp(theta^(i+1) - theta^(j+1))
        const double step = static_cast<double>(j - i) * p.log_theta;
        return std::exp(step + u_i * (-std::expm1(step)));
    };
    return num::sum_series(spec);
}

double mpl(const DTParams& p, std::int64_t i) {
    if (i < 1) throw std::domain_error("mpl: i must be >= 1");
    const double denom = cdf(p, i - 1);
    if (denom <= 0.0) throw std::domain_error("mpl: cdf(i-1) vanishes at this i");
    double acc = 0.0;
    for (std::int64_t k = 1; k <= i; ++k) acc += cdf(p, k - 1);
    return acc / denom;
}

double ss_reliability(const DTParams& theta1, const DTParams& theta2) {
    const double lt1 = theta1.log_theta, lt2 = theta2.log_theta;
    const double pre = std::log(theta2.theta) + 2.0;
    num::SeriesSpec spec;
    spec.start = 0;
    spec.term = [&](std::int64_t y) {
        const double a1 = std::exp(static_cast<double>(y) * lt1);        // theta1^y
        const double a2 = std::exp(static_cast<double>(y + 1) * lt2);    // theta2^(y+1)
        const double bracket = -std::expm1(log_step_ratio(theta1, a1));  // 1 - theta1 e^(a1 - a1 theta1)
        return std::exp(pre + static_cast<double>(y) * (lt1 + lt2) - a2 - a1) * bracket;
    };
    return num::sum_series(spec);
}

OrderStatSpec::OrderStatSpec(int n_, int r_) : n(n_), r(r_) {
    if (n_ < 1 || r_ < 1 || r_ > n_)
        throw std::domain_error("OrderStatSpec: need n >= 1 and 1 <= r <= n");
}

double order_stat_cdf(const DTParams& p, const OrderStatSpec& spec, std::int64_t w) {
    if (w < 0) return 0.0;
    const double F = cdf(p, w);
    if (F >= 1.0) return 1.0;
    // C(n, r) by running product, then the binomial upper tail.
    double binom = 1.0;
    for (int k = 1; k <= spec.r; ++k)
        binom *= static_cast<double>(spec.n - spec.r + k) / static_cast<double>(k);
    double acc = 0.0;
    for (int i = spec.r; i <= spec.n; ++i) {
        acc += binom * std::pow(F, i) * std::pow(1.0 - F, spec.n - i);
        binom *= static_cast<double>(spec.n - i) / static_cast<double>(i + 1);
    }
    return std::min(acc, 1.0);
}

double order_stat_pmf(const DTParams& p, const OrderStatSpec& spec, std::int64_t w) {
    if (w < 0) throw std::domain_error("order_stat_pmf: w must be >= 0");
    const double d = order_stat_cdf(p, spec, w) - order_stat_cdf(p, spec, w - 1);
    return d < 0.0 ? 0.0 : d;
}

std::int64_t quantile(const DTParams& p, double u) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("quantile: u must be in (0,1)");
    if (cdf(p, 0) >= u) return 0;
    std::int64_t lo = 0, hi = 1;
    while (cdf(p, hi) < u) {
        lo = hi;
        hi *= 2;
        if (hi > (std::int64_t{1} << 62))
            throw NonConvergenceError("quantile: support scan exceeded 2^62");
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (cdf(p, mid) >= u)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::vector<std::int64_t> sample(const DTParams& p, std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("sample: n must be >= 1");

    // Cache the CDF over the effective support so each draw is a binary
    // search; fall back to quantile() past the cache (or if the support is
    // too wide to tabulate). Both paths return the smallest y with
    // cdf(y) >= u, so results do not depend on which one ran.
    constexpr std::size_t kMaxTable = 4'000'000;
    std::vector<double> table;
    table.push_back(cdf(p, 0));
    while (table.back() < 1.0 && table.size() < kMaxTable)
        table.push_back(cdf(p, static_cast<std::int64_t>(table.size())));

    std::mt19937_64 eng(seed);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        const double u = (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
        if (u <= table.back()) {
            const auto it = std::lower_bound(table.begin(), table.end(), u);
            out.push_back(static_cast<std::int64_t>(it - table.begin()));
        } else {
            out.push_back(quantile(p, u));
        }
    }
    return out;
}

std::optional<DivisibilityWitness> infinite_divisibility_witness(const DTParams& p) {
    const std::int64_t limit = quantile(p, 1.0 - 1e-12);
    const double threshold = std::exp(-1.0);
    for (std::int64_t x = 1; x <= limit; ++x) {
        const double px = pmf(p, x);
        if (px > threshold) return DivisibilityWitness{x, px};
    }
    return std::nullopt;
}

}  // namespace dt
