#include "novelty/dist_stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "novelty/special.hpp"

namespace novelty {

KsResult ks_test(std::span<const double> values, double dist_mean, double dist_sd) {
  if (values.empty()) throw InvalidArgument("KS test needs at least one value");
  if (!(dist_sd > 0.0) || !std::isfinite(dist_sd)) throw InvalidArgument("KS test needs dist_sd > 0");
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = normal_cdf((x[i] - dist_mean) / dist_sd);
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  const double root_n = std::sqrt(n);
  const double lambda = (root_n + 0.12 + 0.11 / root_n) * d;
  return {d, kolmogorov_survival(lambda)};
}

LogNormalFit fit_lognormal(std::span<const double> values) {
  if (values.size() < 8) {
    throw InvalidArgument("log-normal fit needs at least 8 values, got " + std::to_string(values.size()));
  }
  std::vector<double> logs;
  logs.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw InvalidArgument("log-normal fit needs positive finite values (index " + std::to_string(i) + ")");
    }
    logs.push_back(std::log(values[i]));
  }
  const double n = static_cast<double>(logs.size());
  double sum = 0.0;
  for (double v : logs) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : logs) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  if (!(sd > 0.0)) throw DegenerateData("all values are equal, log-normal spread is zero");
  const auto ks = ks_test(logs, mean, sd);
  return LogNormalFit(mean, sd, ks.d, ks.p, logs.size());
}

std::vector<QqPoint> qq_points(std::span<const double> values) {
  if (values.size() < 2) throw InvalidArgument("Q-Q construction needs at least 2 values");
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  std::vector<QqPoint> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    // The median plotting position is exactly 0.5; AS 241 maps it to 0.
    out.push_back({normal_quantile((static_cast<double>(i) + 0.5) / n), x[i]});
  }
  return out;
}

LogHistogram log_histogram(std::span<const double> values, int bins) {
  if (bins < 1) throw InvalidArgument("histogram needs at least one bin");
  if (values.empty()) throw InvalidArgument("histogram needs at least one value");
  std::vector<double> logs;
  logs.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("log histogram needs positive finite values");
    logs.push_back(std::log(v));
  }
  auto [lo_it, hi_it] = std::minmax_element(logs.begin(), logs.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / bins;
  LogHistogram h;
  h.log_edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) h.log_edges[static_cast<std::size_t>(i)] = lo + width * i;
  h.log_edges.back() = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : logs) {
    auto k = static_cast<int>((v - lo) / width);
    k = std::clamp(k, 0, bins - 1);
    ++h.counts[static_cast<std::size_t>(k)];
  }
  return h;
}

}  // namespace novelty
