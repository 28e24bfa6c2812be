#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "novelty/dist_stats.hpp"
#include "novelty/types.hpp"

namespace novelty::io {

enum class FillPolicy {
  kForwardFill,  // missing minutes repeat the last observed count
  kStrict,       // any missing minute is an error
};

std::optional<FillPolicy> parse_fill_policy(std::string_view name);

/// Traces CSV, header `story_id,t_min,diggs`. Rows are grouped by story_id
/// (first-appearance order) and sorted by t_min. The cohort horizon is the
/// smallest per-story max t_min. Errors are ParseError with the data row.
Cohort parse_traces(std::istream& in, FillPolicy policy);
Cohort ingest_traces(const std::filesystem::path& path, FillPolicy policy);

/// Saturation CSV, header `story_id,n_inf`. Values in file order.
std::vector<double> parse_saturation(std::istream& in);
std::vector<double> ingest_saturation(const std::filesystem::path& path);

/// Novelty CSV, header `t,r`, t = 1, 2, ... with r_1 = 1.
NoveltyCurve parse_novelty(std::istream& in);
NoveltyCurve ingest_novelty(const std::filesystem::path& path);

/// Single-column file with header `n0`: per-story initial counts.
std::vector<double> parse_initial_counts(std::istream& in);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

std::string traces_csv(const Cohort& cohort);
std::string novelty_csv(const NoveltyCurve& curve);
std::string mean_variance_csv(const MeanVarSeries& series);
/// Header `theoretical_z,sample_log_value`.
std::string qq_csv(std::span<const QqPoint> points);
/// Header `bin,log_lo,log_hi,lo,hi,count`.
std::string histogram_csv(const LogHistogram& hist);

/// Writes `path.tmp-<pid>` then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
/// 16 lowercase hex digits.
std::string hex_digest(std::uint64_t digest);

}  // namespace novelty::io
