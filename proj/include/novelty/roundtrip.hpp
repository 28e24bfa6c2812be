#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "novelty/estimation.hpp"
#include "novelty/relaxation.hpp"
#include "novelty/simulator.hpp"

namespace novelty {

/// Simulate -> estimate -> fit self-test with a known generating truth.
struct RoundTripConfig {
  std::uint64_t seed = 1;
  int stories = 2000;
  int horizon = 1440;
  double mu = 0.05;
  double sigma2 = 0.0072;
  ShockFamily family = ShockFamily::kGamma;
  double n0 = 10.0;
  double kww_a = 0.4;  // truth: r_t = exp(-a t^b) / exp(-a)
  double kww_b = 0.4;
  int smooth_window = 5;
  int fit_t_min = 1;
  int fit_t_max = 180;
  int lognormal_minute = 120;
  unsigned threads = 0;
};

struct RoundTripCheck {
  std::string name;
  double truth;
  double estimate;
  std::string criterion;
  bool pass;
};

struct RoundTripResult {
  std::vector<RoundTripCheck> checks;
  /// Slope of the origin regression implied by the first-order model,
  /// mean_t = mu * sum r_s and var_t = sigma2 * sum r_s^2. Diagnostic only.
  double model_implied_slope;
  double true_half_life;
  double fitted_half_life;

  bool all_pass() const;
};

RoundTripResult run_roundtrip(const RoundTripConfig& config);

}  // namespace novelty
