// Command-line front end: simulate cohorts, run the estimators on CSV input,
// and emit CSV/JSON artifacts for plotting.
//
// Exit codes: 0 success, 1 validation or computation failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "novelty/dist_stats.hpp"
#include "novelty/estimation.hpp"
#include "novelty/io.hpp"
#include "novelty/relaxation.hpp"
#include "novelty/report.hpp"
#include "novelty/roundtrip.hpp"
#include "novelty/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Canonical "key=value" lines, sorted by key, hashed for provenance.
class Digest {
 public:
  Digest& add(const std::string& key, const std::string& value) {
    fields_[key] = value;
    return *this;
  }
  Digest& add(const std::string& key, double value) { return add(key, novelty::io::format_number(value)); }
  Digest& add_file(const std::string& key, const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return add(key, novelty::io::hex_digest(novelty::io::fnv1a64(ss.str())));
  }
  std::string hex() const {
    std::string canonical;
    for (const auto& [k, v] : fields_) canonical += k + "=" + v + "\n";
    return novelty::io::hex_digest(novelty::io::fnv1a64(canonical));
  }

 private:
  std::map<std::string, std::string> fields_;
};

void emit_json(const json& j, const std::string& out_path) {
  novelty::io::ensure_finite(j);
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    novelty::io::write_file_atomic(out_path, text);
  }
}

novelty::io::FillPolicy fill_policy(const std::string& name) {
  // Values are restricted by CLI::IsMember, so this cannot fail.
  return *novelty::io::parse_fill_policy(name);
}

const std::vector<std::string> kFillPolicies = {"forward_fill", "strict"};
const std::vector<std::string> kFamilies = {"gamma", "lognormal", "constant"};

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::uint64_t seed = 0;
  int stories = 1000;
  int horizon = 1440;
  double mu = 0.05;
  double sigma2 = 0.0072;
  double n0 = 10.0;
  std::string n0_file;
  std::string family = "gamma";
  double kww_a = 0.4;
  double kww_b = 0.4;
  std::string novelty_file;
  unsigned threads = 0;
  std::string out;
};

void add_simulate(CLI::App& app, SimulateArgs& a) {
  auto* sub = app.add_subcommand("simulate", "Simulate a cohort and write a traces CSV");
  sub->add_option("--seed", a.seed, "Master seed (required)")->required();
  sub->add_option("--stories", a.stories, "Number of stories")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--horizon", a.horizon, "Minutes to simulate")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--mu", a.mu, "Mean growth shock")->capture_default_str();
  sub->add_option("--sigma2", a.sigma2, "Variance of the growth shock")->capture_default_str();
  sub->add_option("--n0", a.n0, "Initial digg count for every story")->capture_default_str();
  sub->add_option("--n0-file", a.n0_file, "Per-story initial counts (CSV, header n0)")->check(CLI::ExistingFile);
  sub->add_option("--family", a.family, "Shock distribution")->capture_default_str()->check(CLI::IsMember(kFamilies));
  sub->add_option("--kww-a", a.kww_a, "Novelty decay rate a in exp(-a t^b)")->capture_default_str();
  sub->add_option("--kww-b", a.kww_b, "Novelty stretching exponent b")->capture_default_str();
  sub->add_option("--novelty", a.novelty_file, "Novelty CSV (t,r) replacing the KWW law")->check(CLI::ExistingFile);
  sub->add_option("--threads", a.threads, "Worker threads, 0 = all cores")->capture_default_str();
  sub->add_option("--out", a.out, "Traces CSV to write")->required();
}

int run_simulate(const SimulateArgs& a) {
  novelty::SimConfig cfg;
  cfg.n_stories = a.stories;
  cfg.horizon = a.horizon;
  cfg.n0 = a.n0;
  cfg.growth = novelty::GrowthParams(a.mu, a.sigma2);
  cfg.shock_family = *novelty::parse_shock_family(a.family);
  cfg.master_seed = a.seed;
  cfg.threads = a.threads;

  Digest digest;
  digest.add("command", "simulate")
      .add("seed", std::to_string(a.seed))
      .add("stories", std::to_string(a.stories))
      .add("horizon", std::to_string(a.horizon))
      .add("mu", a.mu)
      .add("sigma2", a.sigma2)
      .add("family", a.family);
  if (a.novelty_file.empty()) {
    cfg.novelty = novelty::NoveltyCurve::normalized_kww(a.kww_a, a.kww_b, a.horizon);
    digest.add("kww_a", a.kww_a).add("kww_b", a.kww_b);
  } else {
    const auto curve = novelty::io::ingest_novelty(a.novelty_file);
    const auto v = curve.values();
    cfg.novelty = novelty::NoveltyCurve::simulation_input({v.begin(), v.end()});
    digest.add_file("novelty", a.novelty_file);
  }
  if (a.n0_file.empty()) {
    digest.add("n0", a.n0);
  } else {
    std::ifstream in(a.n0_file);
    cfg.n0_per_story = novelty::io::parse_initial_counts(in);
    digest.add_file("n0_file", a.n0_file);
  }

  const auto cohort = novelty::simulate_cohort(cfg);
  novelty::io::write_file_atomic(a.out, novelty::io::traces_csv(cohort));
  std::cout << json{{"command", "simulate"},
                    {"config_digest", digest.hex()},
                    {"seed", a.seed},
                    {"stories", a.stories},
                    {"horizon", a.horizon},
                    {"output", a.out}}
                   .dump()
            << "\n";
  return 0;
}

// --------------------------------------------------------- estimate-growth

struct GrowthArgs {
  std::string traces;
  std::string fill = "forward_fill";
  std::string out_series;
  std::string out_json;
};

void add_growth(CLI::App& app, GrowthArgs& a) {
  auto* sub = app.add_subcommand("estimate-growth", "Mean-variance series and the mu/sigma^2 slope");
  sub->add_option("--traces", a.traces, "Traces CSV")->required()->check(CLI::ExistingFile);
  sub->add_option("--fill", a.fill, "Gap policy")->capture_default_str()->check(CLI::IsMember(kFillPolicies));
  sub->add_option("--out-series", a.out_series, "Mean-variance CSV (t,mean,variance)")->required();
  sub->add_option("--out-json", a.out_json, "Slope JSON (default: stdout)");
}

int run_growth(const GrowthArgs& a) {
  const auto cohort = novelty::io::ingest_traces(a.traces, fill_policy(a.fill));
  const auto series = novelty::mean_variance_series(cohort);
  const auto g = novelty::estimate_growth_ratio(series);
  novelty::io::write_file_atomic(a.out_series, novelty::io::mean_variance_csv(series));
  Digest digest;
  digest.add("command", "estimate-growth").add("fill", a.fill).add_file("traces", a.traces);
  json j = novelty::io::growth_json(g);
  j["command"] = "estimate-growth";
  j["config_digest"] = digest.hex();
  j["stories"] = cohort.size();
  j["horizon_minutes"] = cohort.horizon();
  emit_json(j, a.out_json);
  return 0;
}

// -------------------------------------------------------- estimate-novelty

struct NoveltyArgs {
  std::string traces;
  std::string fill = "forward_fill";
  int smooth = 5;
  std::string out;
};

void add_novelty(CLI::App& app, NoveltyArgs& a) {
  auto* sub = app.add_subcommand("estimate-novelty", "Estimate the novelty curve r_t");
  sub->add_option("--traces", a.traces, "Traces CSV")->required()->check(CLI::ExistingFile);
  sub->add_option("--fill", a.fill, "Gap policy")->capture_default_str()->check(CLI::IsMember(kFillPolicies));
  sub->add_option("--smooth", a.smooth, "Odd moving-average window on mean log counts")->capture_default_str();
  sub->add_option("--out", a.out, "Novelty CSV (t,r)")->required();
}

int run_novelty(const NoveltyArgs& a) {
  const auto cohort = novelty::io::ingest_traces(a.traces, fill_policy(a.fill));
  const auto curve = novelty::estimate_novelty(cohort, a.smooth);
  novelty::io::write_file_atomic(a.out, novelty::io::novelty_csv(curve));
  return 0;
}

// ----------------------------------------------------------- fit-lognormal

struct LogNormalArgs {
  std::string saturation;
  std::string traces;
  std::string fill = "forward_fill";
  int at_minute = -1;
  int bins = 50;
  std::string out_json;
  std::string out_qq;
  std::string out_hist;
};

void add_lognormal(CLI::App& app, LogNormalArgs& a) {
  auto* sub = app.add_subcommand("fit-lognormal", "Log-normal fit, KS test, Q-Q points and histogram");
  auto* sat = sub->add_option("--saturation", a.saturation, "Saturation CSV (story_id,n_inf)")
                  ->check(CLI::ExistingFile);
  auto* tr = sub->add_option("--traces", a.traces, "Traces CSV")->check(CLI::ExistingFile);
  sat->excludes(tr);
  auto* at = sub->add_option("--at-minute", a.at_minute, "Minute at which to take counts from --traces");
  tr->needs(at);
  at->needs(tr);
  sub->add_option("--fill", a.fill, "Gap policy")->capture_default_str()->check(CLI::IsMember(kFillPolicies));
  sub->add_option("--bins", a.bins, "Histogram bins (equal width in log)")->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--out-json", a.out_json, "Fit JSON (default: stdout)");
  sub->add_option("--out-qq", a.out_qq, "Q-Q CSV (theoretical_z,sample_log_value)");
  sub->add_option("--out-hist", a.out_hist, "Histogram CSV");
}

std::vector<double> counts_at(const novelty::Cohort& cohort, int minute) {
  if (minute < 0 || minute > cohort.horizon()) {
    throw novelty::InvalidArgument("--at-minute " + std::to_string(minute) + " outside cohort horizon 0.." +
                                   std::to_string(cohort.horizon()));
  }
  std::vector<double> v(cohort.size());
  for (std::size_t i = 0; i < cohort.size(); ++i) v[i] = cohort.count(i, minute);
  return v;
}

std::vector<double> logs_of(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::log(v[i]);
  return out;
}

int run_lognormal(const LogNormalArgs& a) {
  std::vector<double> values;
  Digest digest;
  digest.add("command", "fit-lognormal").add("bins", std::to_string(a.bins));
  if (!a.saturation.empty()) {
    values = novelty::io::ingest_saturation(a.saturation);
    digest.add_file("saturation", a.saturation);
  } else if (!a.traces.empty()) {
    values = counts_at(novelty::io::ingest_traces(a.traces, fill_policy(a.fill)), a.at_minute);
    digest.add_file("traces", a.traces).add("at_minute", std::to_string(a.at_minute)).add("fill", a.fill);
  } else {
    throw CLI::RequiredError("--saturation or --traces");
  }
  const auto fit = novelty::fit_lognormal(values);
  if (!a.out_qq.empty()) {
    novelty::io::write_file_atomic(a.out_qq, novelty::io::qq_csv(novelty::qq_points(logs_of(values))));
  }
  if (!a.out_hist.empty()) {
    novelty::io::write_file_atomic(a.out_hist, novelty::io::histogram_csv(novelty::log_histogram(values, a.bins)));
  }
  json j = novelty::io::lognormal_json(fit);
  j["command"] = "fit-lognormal";
  j["config_digest"] = digest.hex();
  if (!a.traces.empty()) j["at_minute"] = a.at_minute;
  emit_json(j, a.out_json);
  return 0;
}

// ----------------------------------------------------------------- fit-kww

struct KwwArgs {
  std::string novelty;
  int t_min = 1;
  int t_max = -1;
  std::string out_json;
  std::string out_series;
};

void add_kww(CLI::App& app, KwwArgs& a) {
  auto* sub = app.add_subcommand("fit-kww", "Fit r_t = c exp(-a t^b) to a novelty curve");
  sub->add_option("--novelty", a.novelty, "Novelty CSV (t,r)")->required()->check(CLI::ExistingFile);
  sub->add_option("--t-min", a.t_min, "First minute of the fit window")->capture_default_str();
  sub->add_option("--t-max", a.t_max, "Last minute of the fit window (default: end of curve)");
  sub->add_option("--out-json", a.out_json, "Fit JSON (default: stdout)");
  sub->add_option("--out-series", a.out_series, "Companion CSV (t,r,log_t,log_r,t_pow_b)");
}

int run_kww(const KwwArgs& a) {
  const auto curve = novelty::io::ingest_novelty(a.novelty);
  const int t_max = a.t_max < 0 ? curve.horizon() : a.t_max;
  const auto fit = novelty::fit_kww(curve, a.t_min, t_max);
  if (!a.out_series.empty()) {
    std::string csv = "t,r,log_t,log_r,t_pow_b\n";
    for (const auto& p : novelty::kww_diagnostic_series(curve, fit.params.b(), a.t_min, t_max)) {
      using novelty::io::format_number;
      csv += std::to_string(p.t) + ',' + format_number(p.r) + ',' + format_number(p.log_t) + ',' +
             format_number(p.log_r) + ',' + format_number(p.t_pow_b) + '\n';
    }
    novelty::io::write_file_atomic(a.out_series, csv);
  }
  Digest digest;
  digest.add("command", "fit-kww")
      .add_file("novelty", a.novelty)
      .add("t_min", std::to_string(a.t_min))
      .add("t_max", std::to_string(t_max));
  json j = novelty::io::kww_json(fit, a.t_min, t_max);
  j["command"] = "fit-kww";
  j["config_digest"] = digest.hex();
  emit_json(j, a.out_json);
  return 0;
}

// ---------------------------------------------------------------- halflife

struct HalfLifeArgs {
  double a = 0.4;
  double b = 0.4;
  std::string out_json;
};

void add_halflife(CLI::App& app, HalfLifeArgs& a) {
  auto* sub = app.add_subcommand("halflife", "Half-life of exp(-a t^b) in minutes");
  sub->add_option("--a", a.a, "Decay rate a")->required();
  sub->add_option("--b", a.b, "Stretching exponent b in (0, 1]")->required();
  sub->add_option("--out-json", a.out_json, "Result JSON (default: stdout)");
}

int run_halflife(const HalfLifeArgs& a) {
  const double tau = novelty::half_life(a.a, a.b);
  emit_json(novelty::io::half_life_json(a.a, a.b, tau), a.out_json);
  return 0;
}

// --------------------------------------------------------------- roundtrip

struct RoundTripArgs {
  novelty::RoundTripConfig cfg;
  std::string family = "gamma";
  bool seed_given = false;
};

void add_roundtrip(CLI::App& app, RoundTripArgs& a) {
  auto* sub = app.add_subcommand("roundtrip", "Simulate, estimate and fit; compare against the truth");
  auto& c = a.cfg;
  sub->add_option("--seed", c.seed, "Master seed (required)")->required();
  sub->add_option("--stories", c.stories, "Number of stories")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--horizon", c.horizon, "Minutes to simulate")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--mu", c.mu, "Mean growth shock")->capture_default_str();
  sub->add_option("--sigma2", c.sigma2, "Variance of the growth shock")->capture_default_str();
  sub->add_option("--n0", c.n0, "Initial digg count")->capture_default_str();
  sub->add_option("--family", a.family, "Shock distribution")->capture_default_str()->check(CLI::IsMember(kFamilies));
  sub->add_option("--kww-a", c.kww_a, "True decay rate a")->capture_default_str();
  sub->add_option("--kww-b", c.kww_b, "True stretching exponent b")->capture_default_str();
  sub->add_option("--smooth", c.smooth_window, "Novelty smoothing window")->capture_default_str();
  sub->add_option("--t-min", c.fit_t_min, "KWW fit window start")->capture_default_str();
  sub->add_option("--t-max", c.fit_t_max, "KWW fit window end")->capture_default_str();
  sub->add_option("--lognormal-minute", c.lognormal_minute, "Minute for the log-normality check")
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads, 0 = all cores")->capture_default_str();
}

int run_roundtrip(RoundTripArgs a) {
  a.cfg.family = *novelty::parse_shock_family(a.family);
  const auto res = novelty::run_roundtrip(a.cfg);
  std::printf("%-34s %14s %14s  %-16s %s\n", "check", "truth", "estimate", "criterion", "result");
  for (const auto& c : res.checks) {
    std::printf("%-34s %14.6g %14.6g  %-16s %s\n", c.name.c_str(), c.truth, c.estimate, c.criterion.c_str(),
                c.pass ? "PASS" : "FAIL");
  }
  std::printf("%-34s %14.6g\n", "model-implied origin slope", res.model_implied_slope);
  std::printf("%-34s %14.6g %14.6g\n", "half-life (minutes)", res.true_half_life, res.fitted_half_life);
  return res.all_pass() ? 0 : kExitFailure;
}

// ------------------------------------------------------------------ report

struct ReportArgs {
  std::string traces;
  std::string fill = "forward_fill";
  int smooth = 5;
  int t_min = 1;
  int t_max = 180;
  std::vector<int> at_minutes;
  int bins = 50;
  std::string out;
};

void add_report(CLI::App& app, ReportArgs& a) {
  auto* sub = app.add_subcommand("report", "Run every estimator on a cohort and write one JSON report");
  sub->add_option("--traces", a.traces, "Traces CSV")->required()->check(CLI::ExistingFile);
  sub->add_option("--fill", a.fill, "Gap policy")->capture_default_str()->check(CLI::IsMember(kFillPolicies));
  sub->add_option("--smooth", a.smooth, "Novelty smoothing window")->capture_default_str();
  sub->add_option("--t-min", a.t_min, "KWW fit window start")->capture_default_str();
  sub->add_option("--t-max", a.t_max, "KWW fit window end (clipped to the horizon)")->capture_default_str();
  sub->add_option("--at-minute", a.at_minutes, "Minutes for log-normal fits (default: 120 or the horizon)");
  sub->add_option("--bins", a.bins, "Histogram bins")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--out", a.out, "Report JSON")->required();
}

int run_report(const ReportArgs& a) {
  const auto cohort = novelty::io::ingest_traces(a.traces, fill_policy(a.fill));
  novelty::io::Report rep;
  Digest digest;
  digest.add("command", "report")
      .add_file("traces", a.traces)
      .add("fill", a.fill)
      .add("smooth", std::to_string(a.smooth))
      .add("t_min", std::to_string(a.t_min))
      .add("t_max", std::to_string(a.t_max))
      .add("bins", std::to_string(a.bins));
  rep.metadata = {"report", "", std::nullopt, a.traces, novelty::io::utc_timestamp()};

  rep.mean_variance = novelty::mean_variance_series(cohort);
  rep.growth = novelty::estimate_growth_ratio(*rep.mean_variance);
  rep.novelty = novelty::estimate_novelty(cohort, a.smooth);
  rep.smooth_window = a.smooth;
  rep.kww_t_min = a.t_min;
  rep.kww_t_max = std::min(a.t_max, cohort.horizon());
  rep.kww = novelty::fit_kww(*rep.novelty, rep.kww_t_min, rep.kww_t_max);
  rep.half_life_minutes = novelty::half_life(rep.kww->params.a(), rep.kww->params.b());

  auto minutes = a.at_minutes;
  if (minutes.empty()) minutes.push_back(std::min(120, cohort.horizon()));
  std::string minute_list;
  for (int m : minutes) {
    rep.lognormal.push_back({m, novelty::fit_lognormal(counts_at(cohort, m))});
    minute_list += std::to_string(m) + ";";
  }
  digest.add("at_minutes", minute_list);
  const auto first = counts_at(cohort, minutes.front());
  rep.qq = novelty::qq_points(logs_of(first));
  rep.qq_minute = minutes.front();
  rep.histogram = novelty::log_histogram(first, a.bins);
  rep.metadata.config_digest = digest.hex();

  novelty::io::write_file_atomic(a.out, novelty::io::to_json(rep).dump(2) + "\n");
  return 0;
}

/// Splices a flat `key=value` config file into the argument list right after
/// the subcommand, so flags given on the command line (parsed later, last
/// value wins) override it. Blank lines and lines starting with '#' are ignored.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::vector<std::string> injected;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ConversionError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = strip(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    injected.push_back("--" + key);
    injected.push_back(strip(line.substr(eq + 1)));
  }

  auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.empty() && a[0] != '-'; });
  if (sub == args.end()) throw CLI::ArgumentMismatch("--config must follow a subcommand");
  args.insert(sub + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and estimation for novelty-discounted multiplicative attention growth"};
  app.require_subcommand(1, 1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  SimulateArgs simulate;
  GrowthArgs growth;
  NoveltyArgs novelty_args;
  LogNormalArgs lognormal;
  KwwArgs kww;
  HalfLifeArgs halflife;
  RoundTripArgs roundtrip;
  ReportArgs report;
  add_simulate(app, simulate);
  add_growth(app, growth);
  add_novelty(app, novelty_args);
  add_lognormal(app, lognormal);
  add_kww(app, kww);
  add_halflife(app, halflife);
  add_roundtrip(app, roundtrip);
  add_report(app, report);
  std::string config_file;
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_option("--config", config_file, "Flat key=value file mirroring flag names; flags override it");
  }

  try {
    auto args = expand_config(std::vector<std::string>(argv + 1, argv + argc));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "simulate") return run_simulate(simulate);
    if (cmd == "estimate-growth") return run_growth(growth);
    if (cmd == "estimate-novelty") return run_novelty(novelty_args);
    if (cmd == "fit-lognormal") return run_lognormal(lognormal);
    if (cmd == "fit-kww") return run_kww(kww);
    if (cmd == "halflife") return run_halflife(halflife);
    if (cmd == "roundtrip") return run_roundtrip(roundtrip);
    if (cmd == "report") return run_report(report);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
