#include "novelty/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>

namespace novelty::io {

using nlohmann::json;

json growth_json(const GrowthRatioEstimate& g) { return {{"slope", g.slope}, {"residual_rms", g.residual_rms}}; }

json lognormal_json(const LogNormalFit& fit) {
  return {{"mu_log", fit.mu_log},
          {"sigma_log", fit.sigma_log},
          {"ks_stat", fit.ks_stat},
          {"p_value", fit.p_value},
          {"n", fit.n}};
}

json kww_json(const KwwFit& fit, int t_min, int t_max) {
  return {{"c", fit.params.c()},     {"a", fit.params.a()},           {"b", fit.params.b()},
          {"sse", fit.sse},          {"n_used", fit.n_used},          {"n_excluded", fit.n_excluded},
          {"t_min", t_min},          {"t_max", t_max}};
}

json half_life_json(double a, double b, double tau) { return {{"a", a}, {"b", b}, {"tau_minutes", tau}}; }

void ensure_finite(const json& j) {
  std::function<void(const json&, const std::string&)> walk = [&](const json& node, const std::string& where) {
    if (node.is_number_float() && !std::isfinite(node.get<double>())) {
      throw Error("non-finite number in report at " + (where.empty() ? std::string("/") : where));
    }
    if (node.is_object()) {
      for (auto it = node.begin(); it != node.end(); ++it) walk(it.value(), where + "/" + it.key());
    } else if (node.is_array()) {
      for (std::size_t i = 0; i < node.size(); ++i) walk(node[i], where + "/" + std::to_string(i));
    }
  };
  walk(j, "");
}

json to_json(const Report& report) {
  json out;
  const auto& m = report.metadata;
  out["metadata"] = {{"command", m.command},
                     {"config_digest", m.config_digest},
                     {"seed", m.seed ? json(*m.seed) : json(nullptr)},
                     {"input", m.input},
                     {"generated_at", m.generated_at}};
  if (report.mean_variance) {
    json pts = json::array();
    for (const auto& p : report.mean_variance->points()) {
      pts.push_back({{"t", p.t}, {"mean", p.mean}, {"variance", p.variance}});
    }
    out["mean_variance"] = std::move(pts);
  }
  if (report.growth) out["growth"] = growth_json(*report.growth);
  if (report.novelty) {
    const auto v = report.novelty->values();
    out["novelty"] = {{"smooth_window", report.smooth_window}, {"r", std::vector<double>(v.begin(), v.end())}};
  }
  if (report.kww) out["kww"] = kww_json(*report.kww, report.kww_t_min, report.kww_t_max);
  if (report.half_life_minutes) {
    if (!report.kww) throw Error("half-life section requires the KWW section");
    out["half_life"] = half_life_json(report.kww->params.a(), report.kww->params.b(), *report.half_life_minutes);
  }
  if (!report.lognormal.empty()) {
    json arr = json::array();
    for (const auto& s : report.lognormal) {
      json entry = lognormal_json(s.fit);
      entry["at_minute"] = s.at_minute;
      arr.push_back(std::move(entry));
    }
    out["lognormal"] = std::move(arr);
  }
  if (report.qq) {
    json pts = json::array();
    for (const auto& p : *report.qq) pts.push_back({p.theoretical_z, p.sample_value});
    out["qq"] = {{"at_minute", report.qq_minute}, {"points", std::move(pts)}};
  }
  if (report.histogram) {
    out["histogram"] = {{"at_minute", report.qq_minute},
                        {"log_edges", report.histogram->log_edges},
                        {"counts", report.histogram->counts}};
  }
  ensure_finite(out);
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace novelty::io
