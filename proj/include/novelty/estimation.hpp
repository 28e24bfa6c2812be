#pragma once

#include <span>
#include <vector>

#include "novelty/types.hpp"

namespace novelty {

/// Cross-story sample mean and unbiased variance of log n_i(t) - log n_i(0),
/// for t = 1..horizon. Needs at least two traces.
MeanVarSeries mean_variance_series(const Cohort& cohort);

struct GrowthRatioEstimate {
  double slope;         // estimate of mu / sigma^2
  double residual_rms;  // sqrt(mean((mean - slope * variance)^2))
};

/// Least-squares line through the origin, mean = slope * variance.
/// Throws DegenerateData when every variance is zero.
GrowthRatioEstimate estimate_growth_ratio(const MeanVarSeries& series);

/// Cross-story mean of log n(t) for t = 0..horizon.
std::vector<double> mean_log_counts(const Cohort& cohort);

/// Centered moving average with an odd window. Near either end the window
/// shrinks symmetrically, so the first and last values are never averaged.
std::vector<double> centered_moving_average(std::span<const double> values, int window);

/// Novelty estimate from mean log counts M_0..M_T:
///   r_t = (S_t - S_{t-1}) / (S_1 - S_0),  S = centered_moving_average(M, window).
/// r_1 is set to exactly 1. Throws DegenerateData if S_1 == S_0.
NoveltyCurve novelty_from_mean_logs(std::span<const double> mean_logs, int window);

/// novelty_from_mean_logs(mean_log_counts(cohort), smooth_window).
NoveltyCurve estimate_novelty(const Cohort& cohort, int smooth_window = 5);

}  // namespace novelty
