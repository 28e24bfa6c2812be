#pragma once

#include <functional>

#include "novelty/errors.hpp"

namespace novelty {

struct QuadratureResult {
  double value;
  double abs_error;  // estimated
  int intervals;
  bool converged;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration on [lo, hi].
/// The interval with the largest error estimate is bisected until the summed
/// estimate is below max(abs_tol, rel_tol * |value|) or `max_intervals` is hit.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double rel_tol = 1e-10, double abs_tol = 0.0, int max_intervals = 4000);

/// Bisection for an increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
/// Stops once hi - lo <= rel_tol * |hi| (or hi - lo <= abs_floor); returns the midpoint.
double bisect_increasing(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                         double abs_floor = 0.0);

}  // namespace novelty
