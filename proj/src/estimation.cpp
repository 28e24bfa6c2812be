#include "novelty/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace novelty {

MeanVarSeries mean_variance_series(const Cohort& cohort) {
  const std::size_t n = cohort.size();
  if (n < 2) throw InvalidArgument("mean-variance series needs at least 2 traces");
  const int horizon = cohort.horizon();

  std::vector<double> log0(n);
  for (std::size_t i = 0; i < n; ++i) log0[i] = std::log(cohort.count(i, 0));

  std::vector<MeanVarPoint> points;
  points.reserve(static_cast<std::size_t>(horizon));
  std::vector<double> inc(n);
  for (int t = 1; t <= horizon; ++t) {
    // Shifted by the first story so identical increments give exactly zero variance.
    for (std::size_t i = 0; i < n; ++i) inc[i] = std::log(cohort.count(i, t)) - log0[i];
    const double shift = inc[0];
    double sum = 0.0;
    for (double v : inc) sum += v - shift;
    const double dmean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : inc) ss += (v - shift - dmean) * (v - shift - dmean);
    points.push_back({t, shift + dmean, ss / static_cast<double>(n - 1)});
  }
  return MeanVarSeries(std::move(points));
}

GrowthRatioEstimate estimate_growth_ratio(const MeanVarSeries& series) {
  if (series.size() < 2) throw InvalidArgument("growth ratio needs at least 2 points");
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& p : series.points()) {
    sxy += p.variance * p.mean;
    sxx += p.variance * p.variance;
  }
  if (sxx == 0.0) throw DegenerateData("deterministic cohort, ratio undefined (all variances are zero)");
  const double slope = sxy / sxx;
  double sr = 0.0;
  for (const auto& p : series.points()) {
    const double r = p.mean - slope * p.variance;
    sr += r * r;
  }
  return {slope, std::sqrt(sr / static_cast<double>(series.size()))};
}

std::vector<double> mean_log_counts(const Cohort& cohort) {
  const std::size_t n = cohort.size();
  std::vector<double> m(static_cast<std::size_t>(cohort.horizon()) + 1);
  for (int t = 0; t <= cohort.horizon(); ++t) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::log(cohort.count(i, t));
    m[static_cast<std::size_t>(t)] = sum / static_cast<double>(n);
  }
  return m;
}

std::vector<double> centered_moving_average(std::span<const double> values, int window) {
  if (window < 1 || window % 2 == 0) {
    throw InvalidArgument("smoothing window must be an odd integer >= 1, got " + std::to_string(window));
  }
  const auto len = static_cast<std::ptrdiff_t>(values.size());
  const std::ptrdiff_t half = window / 2;
  std::vector<double> out(values.size());
  for (std::ptrdiff_t i = 0; i < len; ++i) {
    const std::ptrdiff_t h = std::min({half, i, len - 1 - i});
    double sum = 0.0;
    for (std::ptrdiff_t j = i - h; j <= i + h; ++j) sum += values[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = sum / static_cast<double>(2 * h + 1);
  }
  return out;
}

NoveltyCurve novelty_from_mean_logs(std::span<const double> mean_logs, int window) {
  if (mean_logs.size() < 2) throw InvalidArgument("novelty estimate needs horizon >= 1");
  const auto s = centered_moving_average(mean_logs, window);
  const double denom = s[1] - s[0];
  if (denom == 0.0 || !std::isfinite(denom)) {
    throw DegenerateData("no growth in the first minute, novelty normalization undefined");
  }
  std::vector<double> r(s.size() - 1);
  for (std::size_t t = 1; t < s.size(); ++t) r[t - 1] = (s[t] - s[t - 1]) / denom;
  r[0] = 1.0;
  return NoveltyCurve::estimated(std::move(r));
}

NoveltyCurve estimate_novelty(const Cohort& cohort, int smooth_window) {
  return novelty_from_mean_logs(mean_log_counts(cohort), smooth_window);
}

}  // namespace novelty
