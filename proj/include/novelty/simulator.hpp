#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "novelty/rng.hpp"
#include "novelty/types.hpp"

namespace novelty {

enum class ShockFamily { kGamma, kLognormal, kConstant };

std::string_view to_string(ShockFamily family);
/// Accepts "gamma", "lognormal", "constant".
std::optional<ShockFamily> parse_shock_family(std::string_view name);

/// Moment-matched gamma parameters: shape = mu^2 / sigma2, scale = sigma2 / mu.
struct GammaShape {
  double shape;
  double scale;
};
GammaShape gamma_shape_for(const GrowthParams& growth);

/// Draws one growth shock X > 0 with mean mu and variance sigma2.
/// Throws InvalidArgument for sigma2 > 0 with the constant family, or for
/// sigma2 = 0 with a random family.
double draw_shock(const GrowthParams& growth, ShockFamily family, RandomStream& rng);

struct SimConfig {
  int n_stories = 1;
  int horizon = 1;
  double n0 = 1.0;
  /// When non-empty, one initial count per story (overrides n0).
  std::vector<double> n0_per_story;
  GrowthParams growth{0.05, 0.0072};
  NoveltyCurve novelty = NoveltyCurve::simulation_input({1.0});
  std::uint64_t master_seed = 0;
  ShockFamily shock_family = ShockFamily::kGamma;
  /// Worker threads for simulate_cohort; 0 picks the hardware concurrency.
  /// Output does not depend on this value.
  unsigned threads = 1;

  /// Throws InvalidArgument on an inconsistent configuration.
  void validate() const;
  double initial_count(std::size_t story_index) const;
};

/// Story id used for simulated traces: "s<index>".
std::string simulated_story_id(std::size_t story_index);

StoryTrace simulate_story(const SimConfig& config, std::size_t story_index);

/// Same as simulate_story, also returning the shocks X_1..X_horizon.
struct SimulatedPath {
  StoryTrace trace;
  std::vector<double> shocks;
};
SimulatedPath simulate_story_with_shocks(const SimConfig& config, std::size_t story_index);

Cohort simulate_cohort(const SimConfig& config);

}  // namespace novelty
