#include "novelty/roundtrip.hpp"

#include <algorithm>
#include <cmath>

#include "novelty/dist_stats.hpp"

namespace novelty {

bool RoundTripResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RoundTripCheck& c) { return c.pass; });
}

RoundTripResult run_roundtrip(const RoundTripConfig& config) {
  SimConfig sim;
  sim.n_stories = config.stories;
  sim.horizon = config.horizon;
  sim.n0 = config.n0;
  sim.growth = GrowthParams(config.mu, config.sigma2);
  sim.novelty = NoveltyCurve::normalized_kww(config.kww_a, config.kww_b, config.horizon);
  sim.master_seed = config.seed;
  sim.shock_family = config.family;
  sim.threads = config.threads;
  if (config.fit_t_max > config.horizon || config.lognormal_minute > config.horizon) {
    throw InvalidArgument("round-trip windows exceed the horizon");
  }

  const Cohort cohort = simulate_cohort(sim);
  RoundTripResult out{};

  const double true_ratio = config.mu / config.sigma2;
  const auto growth = estimate_growth_ratio(mean_variance_series(cohort));
  out.checks.push_back({"growth ratio mu/sigma2", true_ratio, growth.slope, "within +/-5%",
                        std::abs(growth.slope - true_ratio) <= 0.05 * true_ratio});

  {
    double s1 = 0.0;
    double s2 = 0.0;
    double sxy = 0.0;
    double sxx = 0.0;
    for (int t = 1; t <= config.horizon; ++t) {
      const double r = sim.novelty.at(t);
      s1 += r;
      s2 += r * r;
      const double mean = config.mu * s1;
      const double var = config.sigma2 * s2;
      sxy += var * mean;
      sxx += var * var;
    }
    out.model_implied_slope = sxy / sxx;
  }

  const auto novelty = estimate_novelty(cohort, config.smooth_window);
  const int window_end = config.fit_t_max;
  double sq = 0.0;
  double min_r = novelty.at(1);
  for (int t = 1; t <= window_end; ++t) {
    const double e = novelty.at(t) - sim.novelty.at(t);
    sq += e * e;
    min_r = std::min(min_r, novelty.at(t));
  }
  const double rmse = std::sqrt(sq / window_end);
  out.checks.push_back({"novelty RMSE over [1," + std::to_string(window_end) + "]", 0.0, rmse, "< 0.05", rmse < 0.05});
  out.checks.push_back({"novelty min over [1," + std::to_string(window_end) + "]", sim.novelty.at(window_end), min_r,
                        "< 0.05", min_r < 0.05});

  const auto fit = fit_kww(novelty, config.fit_t_min, config.fit_t_max);
  out.checks.push_back({"KWW exponent b", config.kww_b, fit.params.b(), "in [0.3, 0.5]",
                        fit.params.b() >= 0.3 && fit.params.b() <= 0.5});
  out.checks.push_back({"KWW rate a", config.kww_a, fit.params.a(), "within +/-25%",
                        std::abs(fit.params.a() - config.kww_a) <= 0.25 * config.kww_a});

  std::vector<double> counts(cohort.size());
  for (std::size_t i = 0; i < cohort.size(); ++i) counts[i] = cohort.count(i, config.lognormal_minute);
  const auto ln = fit_lognormal(counts);
  out.checks.push_back({"log-normal KS p at t=" + std::to_string(config.lognormal_minute), 0.05, ln.p_value, ">= 0.05",
                        ln.p_value >= 0.05});

  out.true_half_life = half_life(config.kww_a, config.kww_b);
  out.fitted_half_life = half_life(fit.params.a(), fit.params.b());
  return out;
}

}  // namespace novelty
