#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "novelty/types.hpp"

namespace novelty {

struct KsResult {
  double d;  // sup |F_n - F|
  double p;  // asymptotic p-value with Stephens' finite-n correction
};

/// One-sample Kolmogorov-Smirnov test against Normal(dist_mean, dist_sd).
///
/// d = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n) over the sorted sample,
/// p = kolmogorov_survival((sqrt(n) + 0.12 + 0.11/sqrt(n)) * d).
/// When the normal's parameters come from the same sample, p is conservative
/// (too large); no Lilliefors correction is applied.
KsResult ks_test(std::span<const double> values, double dist_mean, double dist_sd);

/// Fits a log-normal by the sample mean and (n-1) standard deviation of the
/// logs, then KS-tests the logs against that normal. Needs n >= 8, values > 0.
LogNormalFit fit_lognormal(std::span<const double> values);

struct QqPoint {
  double theoretical_z;
  double sample_value;
};

/// Normal Q-Q points: the i-th order statistic (1-based) paired with
/// normal_quantile((i - 0.5) / n). Needs n >= 2.
std::vector<QqPoint> qq_points(std::span<const double> values);

/// Equal-width histogram on log(value).
struct LogHistogram {
  std::vector<double> log_edges;  // bins + 1 edges
  std::vector<std::size_t> counts;
};
LogHistogram log_histogram(std::span<const double> values, int bins);

}  // namespace novelty
