#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "novelty/estimation.hpp"
#include "novelty/simulator.hpp"

namespace novelty {
namespace {

StoryTrace trace_from_logs(const std::string& id, const std::vector<double>& log_counts) {
  std::vector<Sample> s;
  for (std::size_t t = 0; t < log_counts.size(); ++t) s.push_back({static_cast<int>(t), std::exp(log_counts[t])});
  return StoryTrace(id, s);
}

Cohort small_simulated(std::uint64_t seed, int stories = 300, int horizon = 90) {
  SimConfig c;
  c.n_stories = stories;
  c.horizon = horizon;
  c.n0 = 15.0;
  c.growth = GrowthParams(0.05, 0.0072);
  c.novelty = NoveltyCurve::normalized_kww(0.4, 0.4, horizon);
  c.master_seed = seed;
  c.threads = 0;
  return simulate_cohort(c);
}

TEST(MeanVarianceSeries, HandArithmetic) {
  // log-increments 0.5 and 1.5 at t = 1.
  const Cohort c({trace_from_logs("a", {0.0, 0.5}), trace_from_logs("b", {2.0, 3.5})});
  const auto s = mean_variance_series(c);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s.points()[0].mean, 1.0, 1e-12);
  EXPECT_NEAR(s.points()[0].variance, 0.5, 1e-12);
}

TEST(MeanVarianceSeries, IdenticalTracesHaveZeroVariance) {
  const Cohort c({trace_from_logs("a", {1, 2, 3}), trace_from_logs("b", {1, 2, 3}), trace_from_logs("c", {1, 2, 3})});
  for (const auto& p : mean_variance_series(c).points()) EXPECT_EQ(p.variance, 0.0);
}

TEST(MeanVarianceSeries, DeterministicCohort) {
  SimConfig c;
  c.n_stories = 5;
  c.horizon = 20;
  c.n0 = 3.0;
  c.growth = GrowthParams(0.05, 0.0);
  c.shock_family = ShockFamily::kConstant;
  c.novelty = NoveltyCurve::normalized_kww(0.4, 0.4, 20);
  const auto s = mean_variance_series(simulate_cohort(c));
  double expected = 0.0;
  for (const auto& p : s.points()) {
    expected += std::log1p(c.novelty.at(p.t) * 0.05);
    EXPECT_NEAR(p.variance, 0.0, 1e-24);
    EXPECT_NEAR(p.mean, expected, 1e-12);
  }
  EXPECT_THROW(estimate_growth_ratio(s), DegenerateData);
}

TEST(MeanVarianceSeries, NeedsTwoTraces) {
  EXPECT_THROW(mean_variance_series(Cohort({trace_from_logs("a", {0, 1})})), InvalidArgument);
}

TEST(GrowthRatio, ExactLine) {
  const auto g = estimate_growth_ratio(MeanVarSeries({{1, 7, 1}, {2, 14, 2}, {3, 21, 3}}));
  EXPECT_DOUBLE_EQ(g.slope, 7.0);
  EXPECT_NEAR(g.residual_rms, 0.0, 1e-12);
}

TEST(GrowthRatio, SymmetricResiduals) {
  const auto g = estimate_growth_ratio(MeanVarSeries({{1, 6, 1}, {2, 8, 1}}));
  EXPECT_DOUBLE_EQ(g.slope, 7.0);
  EXPECT_DOUBLE_EQ(g.residual_rms, 1.0);
}

TEST(GrowthRatio, ErrorPaths) {
  EXPECT_THROW(estimate_growth_ratio(MeanVarSeries({{1, 1, 1}})), InvalidArgument);
  EXPECT_THROW(estimate_growth_ratio(MeanVarSeries({{1, 1, 0}, {2, 2, 0}})), DegenerateData);
}

TEST(GrowthRatio, ScaleEquivariance) {
  const auto c = small_simulated(3);
  std::vector<StoryTrace> scaled;
  for (const auto& tr : c.traces()) {
    std::vector<Sample> s(tr.samples().begin(), tr.samples().end());
    for (auto& x : s) x.n *= 8.0;  // a power of two keeps logs exact up to the additive shift
    scaled.emplace_back(tr.id(), std::move(s));
  }
  const auto a = mean_variance_series(c);
  const auto b = mean_variance_series(Cohort(std::move(scaled)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a.points()[i].mean, b.points()[i].mean, 1e-12);
    EXPECT_NEAR(a.points()[i].variance, b.points()[i].variance, 1e-12);
  }
  EXPECT_NEAR(estimate_growth_ratio(a).slope, estimate_growth_ratio(b).slope, 1e-8);
}

TEST(Estimators, InvariantUnderStoryPermutation) {
  const auto c = small_simulated(4);
  std::vector<StoryTrace> shuffled(c.traces().begin(), c.traces().end());
  std::mt19937_64 gen(1);
  std::shuffle(shuffled.begin(), shuffled.end(), gen);
  const Cohort p(std::move(shuffled));
  EXPECT_NEAR(estimate_growth_ratio(mean_variance_series(c)).slope,
              estimate_growth_ratio(mean_variance_series(p)).slope, 1e-9);
  const auto r1 = estimate_novelty(c, 5);
  const auto r2 = estimate_novelty(p, 5);
  for (int t = 1; t <= r1.horizon(); ++t) EXPECT_NEAR(r1.at(t), r2.at(t), 1e-9);
}

TEST(MovingAverage, ShrinksSymmetricallyAtEdges) {
  const std::vector<double> v = {0, 1, 2, 3, 10, 5};
  const auto s = centered_moving_average(v, 5);
  EXPECT_DOUBLE_EQ(s[0], 0.0);
  EXPECT_DOUBLE_EQ(s[1], 1.0);            // (0+1+2)/3
  EXPECT_DOUBLE_EQ(s[2], 16.0 / 5.0);     // (0+1+2+3+10)/5
  EXPECT_DOUBLE_EQ(s[3], 21.0 / 5.0);     // (1+2+3+10+5)/5
  EXPECT_DOUBLE_EQ(s[4], 6.0);            // (3+10+5)/3
  EXPECT_DOUBLE_EQ(s[5], 5.0);
  EXPECT_THROW(centered_moving_average(v, 4), InvalidArgument);
  EXPECT_THROW(centered_moving_average(v, 0), InvalidArgument);
  EXPECT_EQ(centered_moving_average(v, 1), v);
}

TEST(Novelty, DirectDifferencing) {
  const std::vector<double> m = {0, 1, 1.5, 1.75};
  const auto r = novelty_from_mean_logs(m, 1);
  ASSERT_EQ(r.horizon(), 3);
  EXPECT_EQ(r.at(1), 1.0);
  EXPECT_DOUBLE_EQ(r.at(2), 0.5);
  EXPECT_DOUBLE_EQ(r.at(3), 0.25);
}

TEST(Novelty, ZeroFirstMinuteGrowthIsAnError) {
  const std::vector<double> m = {1, 1, 2};
  EXPECT_THROW(novelty_from_mean_logs(m, 1), DegenerateData);
}

TEST(Novelty, FirstValueIsExactlyOneForAnyWindow) {
  const auto c = small_simulated(5);
  for (int w : {1, 3, 5, 7, 11}) EXPECT_EQ(estimate_novelty(c, w).at(1), 1.0);
}

TEST(Novelty, TelescopingIdentityWindowOne) {
  const auto c = small_simulated(6);
  const auto m = mean_log_counts(c);
  const auto r = estimate_novelty(c, 1);
  double acc = 0.0;
  for (int t = 1; t <= r.horizon(); ++t) {
    acc += r.at(t) * (m[1] - m[0]);
    EXPECT_NEAR(acc, m[static_cast<std::size_t>(t)] - m[0], 1e-12);
  }
}

TEST(Novelty, ConstantShocksGiveExactLogRatio) {
  SimConfig c;
  c.n_stories = 3;
  c.horizon = 50;
  c.n0 = 10.0;
  const double mu = 0.02;
  c.growth = GrowthParams(mu, 0.0);
  c.shock_family = ShockFamily::kConstant;
  c.novelty = NoveltyCurve::normalized_kww(0.4, 0.4, 50);
  const auto r = estimate_novelty(simulate_cohort(c), 1);
  for (int t = 1; t <= 50; ++t) {
    const double exact = std::log1p(c.novelty.at(t) * mu) / std::log1p(mu);
    EXPECT_NEAR(r.at(t), exact, 1e-10);
    EXPECT_NEAR(r.at(t), c.novelty.at(t), mu);  // first-order agreement
  }
}

TEST(Novelty, RetainsStoriesWithoutGrowth) {
  // Story b never grows; it still enters the cross-story means.
  const Cohort c({trace_from_logs("a", {0, 1, 1.5}), trace_from_logs("b", {2, 2, 2})});
  const auto r = estimate_novelty(c, 1);
  EXPECT_DOUBLE_EQ(r.at(2), 0.5);
}

}  // namespace
}  // namespace novelty
