#pragma once

#include <vector>

#include "novelty/types.hpp"

namespace novelty {

struct KwwFit {
  KwwParams params;
  double sse;      // in log space, over the points used
  int n_used;      // points with r_t > 0 in [t_min, t_max]
  int n_excluded;  // non-positive r_t skipped
};

/// Fits log r_t = log c - a * t^b over t in [t_min, t_max].
///
/// For fixed b the problem is ordinary least squares in (log c, a), so b is
/// profiled: a grid b = 0.05, 0.10, ..., 1.00 picks the best cell, then a
/// golden-section search on [b* - 0.05, b* + 0.05] (clipped to (0, 1])
/// refines it. Non-positive r_t are skipped and counted, never clamped.
///
/// Throws DegenerateData with fewer than 5 usable points and NotDecaying if
/// the best fit has a <= 0.
KwwFit fit_kww(const NoveltyCurve& curve, int t_min, int t_max);

/// Integral of exp(-a t^b) over [0, inf): Gamma(1/b + 1) / a^(1/b).
double kww_total_integral(double a, double b);

/// Integral of exp(-a t^b) over [0, upper] by adaptive quadrature after the
/// substitution u = t^b, which removes the cusp at t = 0:
///   (1/b) * integral_0^(upper^b) u^(1/b - 1) exp(-a u) du.
double kww_partial_integral(double a, double b, double upper, double rel_tol = 1e-10);

/// An upper limit T with integral_T^inf exp(-a t^b) dt < tail_tol.
double kww_tail_cutoff(double a, double b, double tail_tol = 1e-10);

struct HalfLifeOptions {
  double rel_tol = 1e-6;         // on tau
  double quad_rel_tol = 1e-10;   // per partial integral
};

/// tau with integral_0^tau exp(-a t^b) dt = kww_total_integral(a, b) / 2.
double half_life(double a, double b, const HalfLifeOptions& options = {});

/// Plot-ready diagnostics of a novelty curve over [t_min, t_max], r_t > 0 only:
/// log r against t (exponential test), log t (power-law test) and t^b.
struct KwwDiagnosticPoint {
  int t;
  double r;
  double log_t;
  double log_r;
  double t_pow_b;
};
std::vector<KwwDiagnosticPoint> kww_diagnostic_series(const NoveltyCurve& curve, double b, int t_min, int t_max);

}  // namespace novelty
