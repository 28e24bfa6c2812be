#include "novelty/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace novelty {

std::vector<Violation> validate_trace(std::span<const Sample> samples) {
  std::vector<Violation> out;
  if (samples.empty()) {
    out.push_back({ViolationKind::kEmpty, 0, 0, "trace has no samples"});
    return out;
  }
  if (samples.front().t != 0) {
    out.push_back({ViolationKind::kMissingOrigin, 0, samples.front().t, "missing t=0"});
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    if (!std::isfinite(s.n)) {
      out.push_back({ViolationKind::kNonFiniteCount, i, s.t, "non-finite count at t=" + std::to_string(s.t)});
    } else if (s.n <= 0.0) {
      out.push_back({ViolationKind::kNonPositiveCount, i, s.t, "non-positive count at t=" + std::to_string(s.t)});
    }
    if (i == 0) continue;
    const Sample& prev = samples[i - 1];
    if (s.t <= prev.t) {
      out.push_back({ViolationKind::kTimeNotIncreasing, i, s.t, "time not increasing at t=" + std::to_string(s.t)});
    }
    if (s.n < prev.n) {
      out.push_back({ViolationKind::kNonMonotoneCount, i, s.t, "non-monotone at t=" + std::to_string(s.t)});
    }
  }
  return out;
}

StoryTrace::StoryTrace(std::string story_id, std::vector<Sample> samples)
    : id_(std::move(story_id)), samples_(std::move(samples)) {
  auto violations = validate_trace(samples_);
  if (!violations.empty()) {
    throw InvalidArgument("story '" + id_ + "': " + violations.front().message);
  }
}

namespace {

int min_max_t(const std::vector<StoryTrace>& traces) {
  if (traces.empty()) throw InvalidArgument("cohort needs at least one trace");
  int h = std::numeric_limits<int>::max();
  for (const auto& tr : traces) h = std::min(h, tr.max_t());
  return h;
}

}  // namespace

Cohort::Cohort(std::vector<StoryTrace> traces) : Cohort(std::move(traces), -1) {}

Cohort::Cohort(std::vector<StoryTrace> traces, int horizon) : traces_(std::move(traces)) {
  const int limit = min_max_t(traces_);
  horizon_ = horizon < 0 ? limit : horizon;
  if (horizon_ > limit) {
    throw InvalidArgument("horizon " + std::to_string(horizon_) + " exceeds shortest trace (" +
                          std::to_string(limit) + ")");
  }
  // Times are strictly increasing from 0, so dense up to h iff sample h sits at t = h.
  const auto h = static_cast<std::size_t>(horizon_);
  for (const auto& tr : traces_) {
    if (tr.samples().size() <= h || tr.samples()[h].t != horizon_) {
      throw InvalidArgument("story '" + tr.id() + "' is not sampled every minute up to t=" +
                            std::to_string(horizon_));
    }
  }
}

GrowthParams::GrowthParams(double mu, double sigma2) : mu_(mu), sigma2_(sigma2) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidArgument("growth mean mu must be positive");
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) throw InvalidArgument("growth variance sigma2 must be >= 0");
}

KwwParams::KwwParams(double c, double a, double b) : c_(c), a_(a), b_(b) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("KWW constant c must be positive");
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("KWW rate a must be positive");
  if (!(b > 0.0 && b <= 1.0)) throw InvalidArgument("KWW exponent b must lie in (0, 1]");
}

double KwwParams::operator()(double t) const { return c_ * std::exp(-a_ * std::pow(t, b_)); }

namespace {

void check_common(const std::vector<double>& r) {
  if (r.empty()) throw InvalidArgument("novelty curve is empty");
  if (r.front() != 1.0) throw InvalidArgument("novelty curve must have r_1 = 1");
  for (double v : r) {
    if (!std::isfinite(v)) throw InvalidArgument("novelty curve has a non-finite value");
  }
}

}  // namespace

NoveltyCurve NoveltyCurve::simulation_input(std::vector<double> r) {
  check_common(r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0.0) throw InvalidArgument("novelty factor negative at t=" + std::to_string(i + 1));
    if (i > 0 && r[i] > r[i - 1]) {
      throw InvalidArgument("novelty factor increases at t=" + std::to_string(i + 1));
    }
  }
  return NoveltyCurve(std::move(r), false);
}

NoveltyCurve NoveltyCurve::estimated(std::vector<double> r) {
  check_common(r);
  return NoveltyCurve(std::move(r), true);
}

NoveltyCurve NoveltyCurve::normalized_kww(double a, double b, int horizon) {
  const KwwParams law(1.0, a, b);
  if (horizon < 1) throw InvalidArgument("novelty horizon must be >= 1");
  std::vector<double> r(static_cast<std::size_t>(horizon));
  const double first = law(1.0);
  r[0] = 1.0;
  for (int t = 2; t <= horizon; ++t) r[static_cast<std::size_t>(t - 1)] = law(t) / first;
  return simulation_input(std::move(r));
}

LogNormalFit::LogNormalFit(double mu_log_, double sigma_log_, double ks_stat_, double p_value_, std::size_t n_)
    : mu_log(mu_log_), sigma_log(sigma_log_), ks_stat(ks_stat_), p_value(p_value_), n(n_) {
  if (n < 2) throw InvalidArgument("log-normal fit needs n >= 2");
  if (!(sigma_log > 0.0) || !std::isfinite(mu_log)) throw InvalidArgument("log-normal fit has degenerate spread");
  if (!(ks_stat >= 0.0 && ks_stat <= 1.0)) throw InvalidArgument("KS statistic outside [0, 1]");
  if (!(p_value >= 0.0 && p_value <= 1.0)) throw InvalidArgument("p-value outside [0, 1]");
}

MeanVarSeries::MeanVarSeries(std::vector<MeanVarPoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.t != static_cast<int>(i) + 1) throw InvalidArgument("mean-variance series must cover t = 1, 2, ...");
    if (!(p.variance >= 0.0) || !std::isfinite(p.variance) || !std::isfinite(p.mean)) {
      throw InvalidArgument("invalid mean/variance at t=" + std::to_string(p.t));
    }
  }
}

}  // namespace novelty
