#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dt {

// Parameter of the discrete Teissier distribution. The support is
// y = 0, 1, 2, ... and the parameterization requires theta > 1 strictly;
// alpha = ln(theta) is the rate of the underlying continuous law.
struct DTParams {
    explicit DTParams(double theta);
    double theta;
    double log_theta;  // alpha
    double alpha() const { return log_theta; }
};

// P(Y = y) = e * theta^y * (exp(-theta^y) - theta * exp(-theta^(y+1))).
// Evaluated in log space so that theta^y far beyond the overflow threshold
// degrades to pmf = 0 instead of NaN.
double pmf(const DTParams& p, std::int64_t y);
double log_pmf(const DTParams& p, std::int64_t y);

// F(y) = 1 - theta^(y+1) * exp(1 - theta^(y+1)); 0 for y < 0.
double cdf(const DTParams& p, std::int64_t y);

// S(y) = P(Y > y) = theta^(y+1) * exp(1 - theta^(y+1)); 1 for y < 0.
double sf(const DTParams& p, std::int64_t y);
double log_sf(const DTParams& p, std::int64_t y);

// Hazard rate P(Y = y | Y >= y) = 1 - theta * exp(theta^y - theta^(y+1)).
// Nondecreasing in y with limit 1.
double hrf(const DTParams& p, std::int64_t y);

// Reversed hazard rate P(Y = y | Y <= y) = pmf(y) / cdf(y).
double rhrf(const DTParams& p, std::int64_t y);

// Second rate of failure log[S(y)/S(y+1)] = theta^(y+1) * (theta - 1) - ln(theta).
double srf(const DTParams& p, std::int64_t y);

// E(Y^r) for r in [1,4], via the tail-sum identity
// E(Y^r) = sum_{y>=1} (y^r - (y-1)^r) * P(Y >= y) with
// P(Y >= y) = exp(1 + y ln(theta) - theta^y). The equivalent double-sum
// expansion of exp(-theta^y) is avoided: its alternating inner terms are
// astronomically large for theta^y >> 1.
double raw_moment(const DTParams& p, int r);

struct Descriptives {
    double mean;
    double variance;
    double skewness;
    double ex_kurtosis;  // fourth standardized central moment minus 3
    double iod;          // variance / mean
    double cv;           // sqrt(variance) / mean
};
Descriptives descriptives(const DTParams& p);

// M(t) = 1 + e * theta * (e^t - 1) * sum_{y>=1} exp(-theta^y) (theta e^t)^(y-1).
double mgf(const DTParams& p, double t);

// Entropy order rho > 0, rho != 1.
struct RenyiOrder {
    explicit RenyiOrder(double rho);
    double rho;
};

// I_R(rho) = 1/(1-rho) * log sum_{y>=0} pmf(y)^rho.
double renyi_entropy(const DTParams& p, RenyiOrder order);

// Mean residual life m(i) = (1/S(i)) * sum_{j>=i+1} S(j).
double mrl(const DTParams& p, std::int64_t i);

// Mean past life m*(i) = (1/F(i-1)) * sum_{k=1}^{i} F(k-1), i >= 1.
double mpl(const DTParams& p, std::int64_t i);

// R = theta2 e^2 sum_y (theta1 theta2)^y exp(-theta2^(y+1))
//         * (exp(-theta1^y) - theta1 exp(-theta1^(y+1)))
// which equals sum_y pmf_{theta1}(y) * sf_{theta2}(y), i.e. the probability
// that a DT(theta2) draw strictly exceeds an independent DT(theta1) draw.
double ss_reliability(const DTParams& theta1, const DTParams& theta2);

// Sample size n and rank r for order statistics, 1 <= r <= n.
struct OrderStatSpec {
    OrderStatSpec(int n, int r);
    int n, r;
};

// CDF of the r-th order statistic of n iid draws:
// F_r(w) = sum_{i=r}^{n} C(n,i) F(w)^i (1-F(w))^(n-i).
double order_stat_cdf(const DTParams& p, const OrderStatSpec& spec, std::int64_t w);

// f_r(w) = F_r(w) - F_r(w-1).
double order_stat_pmf(const DTParams& p, const OrderStatSpec& spec, std::int64_t w);

// Smallest y with cdf(y) >= u, for u in (0,1). Exponential galloping
// followed by binary search on the closed-form CDF.
std::int64_t quantile(const DTParams& p, double u);

// n iid inverse-CDF draws from a seeded mt19937_64. Identical
// (seed, n, theta) give identical output.
std::vector<std::int64_t> sample(const DTParams& p, std::int64_t n, std::uint64_t seed);

struct DivisibilityWitness {
    std::int64_t x;
    double pmf_x;
};

// Scans x = 1, 2, ... up to the 1 - 1e-12 quantile and returns the first x
// with pmf(x) > exp(-1). Such an x disproves infinite divisibility; an empty
// result only means the necessary condition holds on the scanned range.
std::optional<DivisibilityWitness> infinite_divisibility_witness(const DTParams& p);

}  // namespace dt
