#include <gtest/gtest.h>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "novelty/special.hpp"

namespace novelty {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

double big_normal_cdf(double x) {
  return static_cast<double>(Big(0.5) * boost::math::erfc(-Big(x) / boost::multiprecision::sqrt(Big(2))));
}

double big_normal_quantile(double p) {
  // Phi^-1(p) = -sqrt(2) * erfc_inv(2p)
  return static_cast<double>(-boost::multiprecision::sqrt(Big(2)) * boost::math::erfc_inv(Big(2) * Big(p)));
}

TEST(NormalCdf, MatchesHighPrecisionOracle) {
  for (double x = -9.0; x <= 9.0; x += 0.173) EXPECT_NEAR(normal_cdf(x), big_normal_cdf(x), 1e-15) << x;
  EXPECT_EQ(normal_cdf(0.0), 0.5);
}

TEST(NormalQuantile, MatchesHighPrecisionOracle) {
  for (double p = 0.001; p < 1.0; p += 0.00731) {
    EXPECT_NEAR(normal_quantile(p), big_normal_quantile(p), 1e-12) << p;
  }
  for (double e = -300; e <= -3; e += 7.0) {
    const double p = std::pow(10.0, e);
    EXPECT_NEAR(normal_quantile(p), big_normal_quantile(p), 1e-8) << p;
    EXPECT_NEAR(normal_quantile(1.0 - 1e-12), big_normal_quantile(1.0 - 1e-12), 1e-8);
  }
}

TEST(NormalQuantile, KnownValues) {
  EXPECT_EQ(normal_quantile(0.5), 0.0);
  // mpmath, 40 digits: sqrt(2) * erfinv(0.5)
  EXPECT_NEAR(normal_quantile(0.75), 0.6744897501960817432, 1e-15);
  EXPECT_NEAR(normal_quantile(5.0 / 6.0), 0.9674215661017010396, 1e-15);
  EXPECT_THROW(normal_quantile(0.0), InvalidArgument);
  EXPECT_THROW(normal_quantile(1.0), InvalidArgument);
}

TEST(NormalQuantile, InvertsCdf) {
  // In the upper tail p = Phi(x) carries only ~1e-16 absolute precision, so
  // the achievable error grows like eps / phi(x).
  for (double x = -6.0; x <= 6.0; x += 0.25) {
    const double phi = std::exp(-0.5 * x * x) / std::sqrt(2 * M_PI);
    const double tol = 1e-9 * (1 + std::abs(x)) + (x > 0 ? 4e-16 / phi : 0.0);
    EXPECT_NEAR(normal_quantile(normal_cdf(x)), x, tol) << x;
  }
}

TEST(LanczosGamma, RelativeErrorOnOneToTwentyFive) {
  for (double x = 1.0; x <= 25.0; x += 0.0625) {
    const double want = static_cast<double>(boost::math::tgamma(Big(x)));
    EXPECT_NEAR(lanczos_gamma(x) / want, 1.0, 1e-10) << x;
  }
  EXPECT_NEAR(lanczos_gamma(3.0), 2.0, 1e-13);
  EXPECT_NEAR(lanczos_gamma(3.5), 3.323350970447842551, 1e-13);
  EXPECT_NEAR(lanczos_gamma(0.5), std::sqrt(M_PI), 1e-13);
}

TEST(KolmogorovSurvival, LimitsAndMonotonicity) {
  EXPECT_EQ(kolmogorov_survival(0.0), 1.0);
  EXPECT_NEAR(kolmogorov_survival(10.0), 0.0, 1e-30);
  double prev = 1.0;
  for (double l = 0.0; l <= 3.0; l += 0.01) {
    const double q = kolmogorov_survival(l);
    EXPECT_LE(q, prev + 1e-15);
    EXPECT_GE(q, 0.0);
    EXPECT_LE(q, 1.0);
    prev = q;
  }
}

TEST(KolmogorovSurvival, MatchesAlternativeSeries) {
  // The CDF also has the Jacobi-theta form
  //   K(l) = sqrt(2 pi)/l * sum_{k>=1} exp(-(2k-1)^2 pi^2 / (8 l^2)),
  // which converges fast for small l.
  for (double l = 0.3; l <= 1.5; l += 0.1) {
    double s = 0.0;
    for (int k = 1; k < 50; ++k) s += std::exp(-std::pow(2 * k - 1, 2) * M_PI * M_PI / (8 * l * l));
    const double cdf = std::sqrt(2 * M_PI) / l * s;
    EXPECT_NEAR(kolmogorov_survival(l), 1.0 - cdf, 1e-9) << l;
  }
  // Critical value of the 5% two-sided test.
  EXPECT_NEAR(kolmogorov_survival(1.3581), 0.05, 1e-4);
}

}  // namespace
}  // namespace novelty
