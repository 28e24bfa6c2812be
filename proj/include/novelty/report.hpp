#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "novelty/dist_stats.hpp"
#include "novelty/estimation.hpp"
#include "novelty/relaxation.hpp"

namespace novelty::io {

// JSON forms of the individual results. Times are in minutes; digg counts
// are dimensionless; log values are natural logs.

nlohmann::json growth_json(const GrowthRatioEstimate& g);
nlohmann::json lognormal_json(const LogNormalFit& fit);
nlohmann::json kww_json(const KwwFit& fit, int t_min, int t_max);
nlohmann::json half_life_json(double a, double b, double tau);

struct ReportMetadata {
  std::string command;
  std::string config_digest;
  std::optional<std::uint64_t> seed;
  std::string input;
  std::string generated_at;  // ISO 8601 UTC
};

struct LogNormalSection {
  int at_minute;
  LogNormalFit fit;
};

struct Report {
  ReportMetadata metadata;
  std::optional<MeanVarSeries> mean_variance;
  std::optional<GrowthRatioEstimate> growth;
  std::optional<NoveltyCurve> novelty;
  int smooth_window = 0;
  std::optional<KwwFit> kww;
  int kww_t_min = 0;
  int kww_t_max = 0;
  std::optional<double> half_life_minutes;
  std::vector<LogNormalSection> lognormal;
  std::optional<std::vector<QqPoint>> qq;  // of log N at qq_minute
  int qq_minute = 0;
  std::optional<LogHistogram> histogram;  // of N at qq_minute
};

/// Schema (keys present only when the section was computed):
///   metadata:      {command, config_digest, seed|null, input, generated_at}
///   mean_variance: [{t, mean, variance}]
///   growth:        {slope, residual_rms}
///   novelty:       {smooth_window, r: [r_1, r_2, ...]}
///   kww:           {c, a, b, sse, n_used, n_excluded, t_min, t_max}
///   half_life:     {a, b, tau_minutes}
///   lognormal:     [{at_minute, mu_log, sigma_log, ks_stat, p_value, n}]
///   qq:            {at_minute, points: [[theoretical_z, sample_log_value]]}
///   histogram:     {at_minute, log_edges: [...], counts: [...]}
/// Throws Error if any number is NaN or infinite.
nlohmann::json to_json(const Report& report);

/// Throws Error naming the first non-finite number's JSON pointer.
void ensure_finite(const nlohmann::json& j);

std::string utc_timestamp();

}  // namespace novelty::io
