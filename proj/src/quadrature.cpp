#include "novelty/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>

#include "novelty/errors.hpp"

namespace novelty {

namespace {

// Kronrod abscissae, descending; odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                                    double abs_tol, int max_intervals) {
  if (!(lo <= hi)) throw InvalidArgument("integration bounds out of order");
  if (lo == hi) return {0.0, 0.0, 0, true};

  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod(f, lo, hi));
  double total = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(total)) && count < max_intervals) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Panel can no longer be split in double precision.
      panels.push(worst);
      break;
    }
    Panel left = gauss_kronrod(f, worst.lo, mid);
    Panel right = gauss_kronrod(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }

  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  return {total, error, count, error <= std::max(abs_tol, rel_tol * std::abs(total))};
}

double bisect_increasing(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                         double abs_floor) {
  if (!(lo < hi)) throw InvalidArgument("bisection bracket out of order");
  for (int iter = 0; iter < 200; ++iter) {
    if (hi - lo <= std::max(rel_tol * std::abs(hi), abs_floor)) break;
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace novelty
