#include "novelty/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

namespace novelty {

std::string_view to_string(ShockFamily family) {
  switch (family) {
    case ShockFamily::kGamma:
      return "gamma";
    case ShockFamily::kLognormal:
      return "lognormal";
    case ShockFamily::kConstant:
      return "constant";
  }
  return "unknown";
}

std::optional<ShockFamily> parse_shock_family(std::string_view name) {
  if (name == "gamma") return ShockFamily::kGamma;
  if (name == "lognormal") return ShockFamily::kLognormal;
  if (name == "constant") return ShockFamily::kConstant;
  return std::nullopt;
}

GammaShape gamma_shape_for(const GrowthParams& growth) {
  if (growth.sigma2() <= 0.0) throw InvalidArgument("gamma shocks need sigma2 > 0");
  return {growth.mu() * growth.mu() / growth.sigma2(), growth.sigma2() / growth.mu()};
}

namespace {

void check_family(const GrowthParams& growth, ShockFamily family) {
  if (family == ShockFamily::kConstant && growth.sigma2() > 0.0) {
    throw InvalidArgument("constant shocks require sigma2 = 0");
  }
  if (family != ShockFamily::kConstant && growth.sigma2() == 0.0) {
    throw InvalidArgument("sigma2 = 0 requires the constant shock family");
  }
}

}  // namespace

double draw_shock(const GrowthParams& growth, ShockFamily family, RandomStream& rng) {
  check_family(growth, family);
  switch (family) {
    case ShockFamily::kConstant:
      return growth.mu();
    case ShockFamily::kGamma: {
      const auto g = gamma_shape_for(growth);
      return rng.gamma(g.shape, g.scale);
    }
    case ShockFamily::kLognormal: {
      // E[X] = exp(m + s2/2), Var[X] = (exp(s2) - 1) E[X]^2.
      const double s2 = std::log1p(growth.sigma2() / (growth.mu() * growth.mu()));
      const double m = std::log(growth.mu()) - 0.5 * s2;
      return std::exp(m + std::sqrt(s2) * rng.normal());
    }
  }
  throw InvalidArgument("unknown shock family");
}

void SimConfig::validate() const {
  if (n_stories < 1) throw InvalidArgument("n_stories must be >= 1");
  if (horizon < 1) throw InvalidArgument("horizon must be >= 1");
  if (novelty.horizon() < horizon) {
    throw InvalidArgument("novelty curve covers " + std::to_string(novelty.horizon()) +
                          " minutes, horizon is " + std::to_string(horizon));
  }
  if (novelty.is_estimate()) throw InvalidArgument("simulation needs an exact novelty curve, not an estimate");
  if (n0_per_story.empty()) {
    if (!(n0 > 0.0) || !std::isfinite(n0)) throw InvalidArgument("n0 must be positive");
  } else {
    if (n0_per_story.size() != static_cast<std::size_t>(n_stories)) {
      throw InvalidArgument("per-story n0 has " + std::to_string(n0_per_story.size()) + " values for " +
                            std::to_string(n_stories) + " stories");
    }
    for (double v : n0_per_story) {
      if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("per-story n0 must be positive");
    }
  }
  check_family(growth, shock_family);
}

double SimConfig::initial_count(std::size_t story_index) const {
  return n0_per_story.empty() ? n0 : n0_per_story.at(story_index);
}

std::string simulated_story_id(std::size_t story_index) { return "s" + std::to_string(story_index); }

namespace {

StoryTrace run_story(const SimConfig& config, std::size_t story_index, std::vector<double>* shocks) {
  RandomStream rng(mix_seed(config.master_seed, story_index));
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(config.horizon) + 1);
  double n = config.initial_count(story_index);
  samples.push_back({0, n});
  for (int t = 1; t <= config.horizon; ++t) {
    const double x = draw_shock(config.growth, config.shock_family, rng);
    if (shocks) shocks->push_back(x);
    n *= 1.0 + config.novelty.at(t) * x;
    samples.push_back({t, n});
  }
  return StoryTrace(simulated_story_id(story_index), std::move(samples));
}

}  // namespace

StoryTrace simulate_story(const SimConfig& config, std::size_t story_index) {
  config.validate();
  return run_story(config, story_index, nullptr);
}

SimulatedPath simulate_story_with_shocks(const SimConfig& config, std::size_t story_index) {
  config.validate();
  std::vector<double> shocks;
  shocks.reserve(static_cast<std::size_t>(config.horizon));
  auto trace = run_story(config, story_index, &shocks);
  return {std::move(trace), std::move(shocks)};
}

Cohort simulate_cohort(const SimConfig& config) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.n_stories);
  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

  std::vector<std::optional<StoryTrace>> slots(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) slots[i].emplace(run_story(config, i, nullptr));
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < n; i += workers) slots[i].emplace(run_story(config, i, nullptr));
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<StoryTrace> traces;
  traces.reserve(n);
  for (auto& s : slots) traces.push_back(std::move(*s));
  return Cohort(std::move(traces), config.horizon);
}

}  // namespace novelty
