#pragma once

#include "novelty/errors.hpp"

namespace novelty {

/// Standard normal CDF, 0.5 * erfc(-x / sqrt(2)). std::erfc is accurate to a
/// few ulps, well inside the 1e-7 absolute error this code relies on.
double normal_cdf(double x);

/// Standard normal quantile, Wichura's AS 241 (PPND16) rational
/// approximation; about 1e-16 relative accuracy for p in (1e-300, 1 - 1e-16).
/// Throws InvalidArgument unless 0 < p < 1.
double normal_quantile(double p);

/// Gamma function via the Lanczos approximation (g = 7, 9 terms) with the
/// reflection formula below 0.5. Relative error below 1e-13 on [1, 25].
double lanczos_gamma(double x);

/// Asymptotic Kolmogorov survival function
///   Q(lambda) = 2 * sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2),
/// summed until a term drops below 1e-10, clamped to [0, 1].
double kolmogorov_survival(double lambda);

}  // namespace novelty
