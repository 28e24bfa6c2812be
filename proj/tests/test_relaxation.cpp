#include <gtest/gtest.h>

#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "novelty/relaxation.hpp"

namespace novelty {
namespace {

// exp(-a t^b) / exp(-a), so r_1 = 1 and the fitted c should come out as e^a.
NoveltyCurve kww_curve(double a, double b, int horizon) {
  std::vector<double> r(static_cast<std::size_t>(horizon));
  for (int t = 1; t <= horizon; ++t) r[static_cast<std::size_t>(t - 1)] = std::exp(a - a * std::pow(t, b));
  return NoveltyCurve::estimated(r);
}

TEST(FitKww, RecoversStretchedLawExactly) {
  const auto curve = kww_curve(0.4, 0.4, 240);
  const auto fit = fit_kww(curve, 1, 240);
  EXPECT_NEAR(fit.params.c() * std::exp(-0.4), 1.0, 1e-3);
  EXPECT_NEAR(fit.params.a(), 0.4, 1e-3);
  EXPECT_NEAR(fit.params.b(), 0.4, 1e-3);
  EXPECT_LT(fit.sse, 1e-8);
  EXPECT_EQ(fit.n_used, 240);
  EXPECT_EQ(fit.n_excluded, 0);
}

TEST(FitKww, PureExponentialIsTheBoundary) {
  const auto curve = kww_curve(0.1, 1.0, 200);
  const auto fit = fit_kww(curve, 1, 200);
  EXPECT_NEAR(fit.params.b(), 1.0, 1e-6);
  EXPECT_NEAR(fit.params.a(), 0.1, 1e-6);
  EXPECT_LT(fit.sse, 1e-10);
}

TEST(FitKww, ExactOffTheGrid) {
  for (double b : {0.07, 0.37, 0.415, 0.63, 0.83, 0.99}) {
    for (double a : {0.1, 0.4, 1.3}) {
      const auto curve = kww_curve(a, b, 300);
      const auto fit = fit_kww(curve, 1, 300);
      EXPECT_NEAR(fit.params.b(), b, 1e-6) << a << " " << b;
      EXPECT_NEAR(fit.params.a(), a, 1e-5 * std::max(1.0, a)) << a << " " << b;
      EXPECT_NEAR(std::log(fit.params.c()), a, 1e-5 * std::max(1.0, a)) << a << " " << b;
      EXPECT_LT(fit.sse, 1e-9) << a << " " << b;
    }
  }
}

TEST(FitKww, SkipsNonPositiveValues) {
  auto base = kww_curve(0.4, 0.4, 100);
  std::vector<double> r(base.values().begin(), base.values().end());
  r[10] = 0.0;
  r[20] = -0.01;
  r[30] = -1.0;
  const auto fit = fit_kww(NoveltyCurve::estimated(r), 1, 100);
  EXPECT_EQ(fit.n_excluded, 3);
  EXPECT_EQ(fit.n_used, 97);
  EXPECT_NEAR(fit.params.b(), 0.4, 1e-6);
}

TEST(FitKww, ErrorPaths) {
  const auto curve = kww_curve(0.4, 0.4, 100);
  EXPECT_THROW(fit_kww(curve, 0, 50), InvalidArgument);
  EXPECT_THROW(fit_kww(curve, 1, 101), InvalidArgument);
  EXPECT_THROW(fit_kww(curve, 60, 50), InvalidArgument);
  EXPECT_THROW(fit_kww(curve, 1, 4), DegenerateData);

  std::vector<double> sparse(20, -1.0);
  sparse[0] = 1.0;
  sparse[1] = 0.5;
  EXPECT_THROW(fit_kww(NoveltyCurve::estimated(sparse), 1, 20), DegenerateData);

  std::vector<double> rising(50);
  for (int t = 1; t <= 50; ++t) rising[static_cast<std::size_t>(t - 1)] = std::exp(0.05 * (t - 1));
  EXPECT_THROW(fit_kww(NoveltyCurve::estimated(rising), 1, 50), NotDecaying);
}

TEST(KwwTotalIntegral, ClosedForms) {
  EXPECT_NEAR(kww_total_integral(0.4, 1.0), 2.5, 1e-13);
  EXPECT_NEAR(kww_total_integral(1.0, 0.5), 2.0, 1e-13);
  // Gamma(3.5) / 0.4^2.5, mpmath at 40 digits.
  EXPECT_NEAR(kww_total_integral(0.4, 0.4), 32.84174540858161347, 32.84 * 1e-12);
  EXPECT_THROW(kww_total_integral(0.0, 0.5), InvalidArgument);
  EXPECT_THROW(kww_total_integral(1.0, 1.5), InvalidArgument);
  EXPECT_THROW(kww_total_integral(1.0, 0.0), InvalidArgument);
}

TEST(KwwTotalIntegral, AgreesWithQuadrature) {
  for (double a : {0.1, 0.4, 1.0, 2.0}) {
    for (double b : {0.3, 0.4, 0.5, 1.0}) {
      const double upper = kww_tail_cutoff(a, b, 1e-10);
      const double numeric = kww_partial_integral(a, b, upper);
      const double closed = kww_total_integral(a, b);
      EXPECT_NEAR(numeric / closed, 1.0, 1e-6) << a << " " << b;
    }
  }
}

TEST(KwwPartialIntegral, ElementaryCases) {
  // b = 1: (1 - e^{-aT}) / a
  EXPECT_NEAR(kww_partial_integral(0.4, 1.0, 3.0), (1.0 - std::exp(-1.2)) / 0.4, 1e-12);
  // b = 1/2: 2/a^2 * (1 - (1 + a sqrt(T)) e^{-a sqrt(T)})
  const double a = 1.0;
  const double T = 7.0;
  EXPECT_NEAR(kww_partial_integral(a, 0.5, T), 2.0 * (1.0 - (1.0 + std::sqrt(T)) * std::exp(-std::sqrt(T))), 1e-12);
  EXPECT_EQ(kww_partial_integral(a, 0.5, 0.0), 0.0);
  EXPECT_THROW(kww_partial_integral(a, 0.5, -1.0), InvalidArgument);
}

TEST(HalfLife, PureExponential) {
  EXPECT_NEAR(half_life(0.4, 1.0) / (std::log(2.0) / 0.4), 1.0, 1e-6);
}

TEST(HalfLife, SquareRootLawAgainstRootFinderOracle) {
  // With b = 1/2 the antiderivative is -2 (sqrt(t) + 1) e^{-sqrt(t)}, so the
  // half-life is u^2 where (u + 1) e^{-u} = 1/2. Solved here in 50 digits.
  using Big = boost::multiprecision::cpp_bin_float_50;
  auto f = [](Big u) { return (u + 1) * boost::multiprecision::exp(-u) - Big(0.5); };
  boost::math::tools::eps_tolerance<Big> tol(150);
  std::uintmax_t iters = 200;
  const auto bracket = boost::math::tools::bisect(f, Big(1), Big(3), tol, iters);
  const Big u = (bracket.first + bracket.second) / 2;
  const double tau = static_cast<double>(u * u);
  EXPECT_NEAR(tau, 2.816848618897984815, 1e-15);
  EXPECT_NEAR(half_life(1.0, 0.5) / tau, 1.0, 1e-6);
}

TEST(HalfLife, ReferenceLawIsAboutSixtyNineMinutes) {
  const double tau = half_life(0.4, 0.4);
  // Inverse regularized incomplete gamma in mpmath: 69.00214151088...
  EXPECT_NEAR(tau, 69.00214151088214, 69.0 * 1e-6);
  EXPECT_EQ(std::lround(tau), 69);
}

TEST(HalfLife, ScalingLaw) {
  const HalfLifeOptions tight{1e-12, 1e-12};
  for (double b : {0.3, 0.4, 0.7, 1.0}) {
    const double unit = half_life(1.0, b, tight);
    for (double a : {0.05, 0.4, 3.0}) {
      EXPECT_NEAR(half_life(a, b, tight) / (std::pow(a, -1.0 / b) * unit), 1.0, 1e-9) << a << " " << b;
    }
  }
}

TEST(HalfLife, SatisfiesDefiningEquation) {
  for (double a : {0.1, 0.4, 2.0}) {
    for (double b : {0.25, 0.4, 0.6, 1.0}) {
      const double tau = half_life(a, b);
      const double total = kww_total_integral(a, b);
      EXPECT_LE(std::abs(kww_partial_integral(a, b, tau) - 0.5 * total) / total, 1e-5);
    }
  }
}

TEST(HalfLife, DomainErrors) {
  EXPECT_THROW(half_life(-0.4, 0.4), InvalidArgument);
  EXPECT_THROW(half_life(0.4, 0.0), InvalidArgument);
  EXPECT_THROW(half_life(0.4, 1.2), InvalidArgument);
}

TEST(KwwDiagnostics, SeriesColumns) {
  auto base = kww_curve(0.4, 0.4, 10);
  std::vector<double> r(base.values().begin(), base.values().end());
  r[4] = -0.1;
  const auto s = kww_diagnostic_series(NoveltyCurve::estimated(r), 0.4, 1, 10);
  ASSERT_EQ(s.size(), 9u);
  EXPECT_EQ(s[4].t, 6);
  EXPECT_DOUBLE_EQ(s[4].log_t, std::log(6.0));
  EXPECT_DOUBLE_EQ(s[4].t_pow_b, std::pow(6.0, 0.4));
  EXPECT_DOUBLE_EQ(s[4].log_r, std::log(r[5]));
}

}  // namespace
}  // namespace novelty
