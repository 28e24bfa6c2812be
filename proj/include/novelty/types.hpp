#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "novelty/errors.hpp"

namespace novelty {

/// One observation of a story: cumulative digg count `n` at minute `t`
/// after front-page appearance.
struct Sample {
  int t = 0;
  double n = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

enum class ViolationKind {
  kEmpty,
  kMissingOrigin,       // first sample is not at t = 0
  kTimeNotIncreasing,
  kNonPositiveCount,
  kNonFiniteCount,
  kNonMonotoneCount,    // count decreased
};

struct Violation {
  ViolationKind kind;
  std::size_t index;  // position in the sample sequence
  int t;
  std::string message;
};

/// Returns every invariant violation of a sample sequence; empty means valid.
/// Never throws.
std::vector<Violation> validate_trace(std::span<const Sample> samples);

/// A story's digg counts, starting at front-page appearance (t = 0).
/// Construction throws InvalidArgument if validate_trace reports anything.
class StoryTrace {
 public:
  StoryTrace(std::string story_id, std::vector<Sample> samples);

  const std::string& id() const noexcept { return id_; }
  std::span<const Sample> samples() const noexcept { return samples_; }
  int max_t() const noexcept { return samples_.back().t; }

  friend bool operator==(const StoryTrace&, const StoryTrace&) = default;

 private:
  std::string id_;
  std::vector<Sample> samples_;
};

/// Traces aligned at t = 0 and dense (one sample per minute) up to `horizon`.
class Cohort {
 public:
  /// Horizon defaults to the smallest max_t over traces.
  explicit Cohort(std::vector<StoryTrace> traces);
  Cohort(std::vector<StoryTrace> traces, int horizon);

  std::size_t size() const noexcept { return traces_.size(); }
  int horizon() const noexcept { return horizon_; }
  std::span<const StoryTrace> traces() const noexcept { return traces_; }
  const StoryTrace& operator[](std::size_t i) const { return traces_[i]; }

  /// Count of story `i` at minute `t`, 0 <= t <= horizon.
  double count(std::size_t i, int t) const { return traces_[i].samples()[static_cast<std::size_t>(t)].n; }

  friend bool operator==(const Cohort&, const Cohort&) = default;

 private:
  std::vector<StoryTrace> traces_;
  int horizon_;
};

/// Mean and variance of the positive i.i.d. growth shocks.
class GrowthParams {
 public:
  GrowthParams(double mu, double sigma2);

  double mu() const noexcept { return mu_; }
  double sigma2() const noexcept { return sigma2_; }
  double ratio() const noexcept { return mu_ / sigma2_; }

 private:
  double mu_;
  double sigma2_;
};

/// Stretched-exponential law r_t = c * exp(-a * t^b).
class KwwParams {
 public:
  KwwParams(double c, double a, double b);

  double c() const noexcept { return c_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  double operator()(double t) const;

 private:
  double c_;
  double a_;
  double b_;
};

/// Novelty factors r_1..r_horizon with r_1 = 1.
///
/// Simulation inputs must also be non-negative and non-increasing; estimated
/// curves are stored raw and may be noisy, non-monotone or even negative.
class NoveltyCurve {
 public:
  static NoveltyCurve simulation_input(std::vector<double> r);
  static NoveltyCurve estimated(std::vector<double> r);

  /// r_t = exp(-a t^b) / exp(-a), the decay law rescaled so r_1 = 1.
  static NoveltyCurve normalized_kww(double a, double b, int horizon);

  int horizon() const noexcept { return static_cast<int>(r_.size()); }
  /// 1-based: at(1) == 1.
  double at(int t) const { return r_[static_cast<std::size_t>(t - 1)]; }
  std::span<const double> values() const noexcept { return r_; }
  bool is_estimate() const noexcept { return estimate_; }

 private:
  NoveltyCurve(std::vector<double> r, bool estimate) : r_(std::move(r)), estimate_(estimate) {}

  std::vector<double> r_;
  bool estimate_;
};

struct LogNormalFit {
  LogNormalFit(double mu_log, double sigma_log, double ks_stat, double p_value, std::size_t n);

  double mu_log;
  double sigma_log;
  double ks_stat;
  double p_value;
  std::size_t n;
};

struct MeanVarPoint {
  int t;
  double mean;
  double variance;
};

/// Cross-story mean and variance of log N_t - log N_0 for t = 1..horizon.
class MeanVarSeries {
 public:
  explicit MeanVarSeries(std::vector<MeanVarPoint> points);

  std::span<const MeanVarPoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<MeanVarPoint> points_;
};

}  // namespace novelty
