#include "novelty/relaxation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "novelty/quadrature.hpp"
#include "novelty/special.hpp"

namespace novelty {

namespace {

void check_domain(double a, double b) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("KWW rate a must be positive");
  if (!(b > 0.0 && b <= 1.0)) throw InvalidArgument("KWW exponent b must lie in (0, 1]");
}

struct Line {
  double intercept;
  double slope;
  double sse;
};

struct LogPoint {
  double t;
  double log_r;
};

Line profile(const std::vector<LogPoint>& pts, double b) {
  const double n = static_cast<double>(pts.size());
  double xm = 0.0;
  double ym = 0.0;
  for (const auto& p : pts) {
    xm += std::pow(p.t, b);
    ym += p.log_r;
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& p : pts) {
    const double dx = std::pow(p.t, b) - xm;
    sxx += dx * dx;
    sxy += dx * (p.log_r - ym);
  }
  const double slope = sxy / sxx;
  const double intercept = ym - slope * xm;
  double sse = 0.0;
  for (const auto& p : pts) {
    const double e = p.log_r - intercept - slope * std::pow(p.t, b);
    sse += e * e;
  }
  return {intercept, slope, sse};
}

}  // namespace

KwwFit fit_kww(const NoveltyCurve& curve, int t_min, int t_max) {
  if (t_min < 1 || t_max > curve.horizon() || t_min > t_max) {
    throw InvalidArgument("fit window [" + std::to_string(t_min) + ", " + std::to_string(t_max) +
                          "] is outside the curve's 1.." + std::to_string(curve.horizon()));
  }
  std::vector<LogPoint> pts;
  int excluded = 0;
  for (int t = t_min; t <= t_max; ++t) {
    const double r = curve.at(t);
    if (r > 0.0) {
      pts.push_back({static_cast<double>(t), std::log(r)});
    } else {
      ++excluded;
    }
  }
  if (pts.size() < 5) {
    throw DegenerateData("KWW fit needs at least 5 positive values, got " + std::to_string(pts.size()));
  }

  double best_b = 0.05;
  Line best = profile(pts, best_b);
  for (int k = 2; k <= 20; ++k) {
    const double b = 0.05 * k;
    const Line line = profile(pts, b);
    if (line.sse < best.sse) {
      best = line;
      best_b = b;
    }
  }

  double lo = std::max(best_b - 0.05, 1e-3);
  double hi = std::min(best_b + 0.05, 1.0);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = profile(pts, x1).sse;
  double f2 = profile(pts, x2).sse;
  while (hi - lo > 1e-9) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = profile(pts, x1).sse;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = profile(pts, x2).sse;
    }
  }
  const double refined_b = 0.5 * (lo + hi);
  const Line refined = profile(pts, refined_b);
  if (refined.sse < best.sse) {
    best = refined;
    best_b = refined_b;
  }

  const double a = -best.slope;
  if (!(a > 0.0)) {
    throw NotDecaying("fitted rate a = " + std::to_string(a) + " is not positive; curve is not decaying");
  }
  return {KwwParams(std::exp(best.intercept), a, best_b), best.sse, static_cast<int>(pts.size()), excluded};
}

double kww_total_integral(double a, double b) {
  check_domain(a, b);
  const double k = 1.0 / b;
  return lanczos_gamma(k + 1.0) / std::pow(a, k);
}

double kww_partial_integral(double a, double b, double upper, double rel_tol) {
  check_domain(a, b);
  if (!(upper >= 0.0)) throw InvalidArgument("integration limit must be >= 0");
  if (upper == 0.0) return 0.0;
  const double p = 1.0 / b - 1.0;
  auto integrand = [a, p](double u) { return p == 0.0 ? std::exp(-a * u) : std::pow(u, p) * std::exp(-a * u); };
  const auto res = integrate_adaptive(integrand, 0.0, std::pow(upper, b), rel_tol);
  return res.value / b;
}

double kww_tail_cutoff(double a, double b, double tail_tol) {
  check_domain(a, b);
  // In u = t^b the tail is (1/b) * int_U^inf u^p e^(-a u) du with p = 1/b - 1,
  // bounded by U^p e^(-a U) / (b (a - p / U)) once a U > p.
  const double p = 1.0 / b - 1.0;
  double u = (p + 1.0) / a;
  for (;;) {
    const double margin = a - p / u;
    if (margin > 0.0) {
      const double bound = std::exp(p * std::log(u) - a * u) / (b * margin);
      if (bound < tail_tol) break;
    }
    u *= 1.25;
  }
  return std::pow(u, 1.0 / b);
}

double half_life(double a, double b, const HalfLifeOptions& options) {
  check_domain(a, b);
  const double target = 0.5 * kww_total_integral(a, b);
  auto excess = [&](double tau) { return kww_partial_integral(a, b, tau, options.quad_rel_tol) - target; };
  double hi = std::pow(a, -1.0 / b);
  while (excess(hi) < 0.0) hi *= 2.0;
  return bisect_increasing(excess, 0.0, hi, options.rel_tol);
}

std::vector<KwwDiagnosticPoint> kww_diagnostic_series(const NoveltyCurve& curve, double b, int t_min, int t_max) {
  if (t_min < 1 || t_max > curve.horizon() || t_min > t_max) throw InvalidArgument("diagnostic window out of range");
  std::vector<KwwDiagnosticPoint> out;
  for (int t = t_min; t <= t_max; ++t) {
    const double r = curve.at(t);
    if (!(r > 0.0)) continue;
    out.push_back({t, r, std::log(static_cast<double>(t)), std::log(r), std::pow(static_cast<double>(t), b)});
  }
  return out;
}

}  // namespace novelty
