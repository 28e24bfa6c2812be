#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "novelty/dist_stats.hpp"
#include "novelty/estimation.hpp"
#include "novelty/relaxation.hpp"
#include "novelty/rng.hpp"
#include "novelty/roundtrip.hpp"
#include "novelty/simulator.hpp"

namespace py = pybind11;
using namespace novelty;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// counts[i, t] for story i and minute t = 0..T.
Cohort cohort_from(const Array& counts) {
  if (counts.ndim() != 2) throw InvalidArgument("counts must be 2-D (stories x minutes)");
  auto c = counts.unchecked<2>();
  std::vector<StoryTrace> traces;
  traces.reserve(static_cast<std::size_t>(c.shape(0)));
  for (py::ssize_t i = 0; i < c.shape(0); ++i) {
    std::vector<Sample> samples(static_cast<std::size_t>(c.shape(1)));
    for (py::ssize_t t = 0; t < c.shape(1); ++t) samples[static_cast<std::size_t>(t)] = {static_cast<int>(t), c(i, t)};
    traces.emplace_back(simulated_story_id(static_cast<std::size_t>(i)), std::move(samples));
  }
  return Cohort(std::move(traces));
}

Array counts_of(const Cohort& cohort) {
  const auto rows = static_cast<py::ssize_t>(cohort.size());
  const auto cols = static_cast<py::ssize_t>(cohort.horizon()) + 1;
  Array out({rows, cols});
  auto m = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < rows; ++i) {
    for (py::ssize_t t = 0; t < cols; ++t) m(i, t) = cohort.count(static_cast<std::size_t>(i), static_cast<int>(t));
  }
  return out;
}

std::vector<double> to_vector(const Array& a) {
  if (a.ndim() != 1) throw InvalidArgument("expected a 1-D array");
  return std::vector<double>(a.data(), a.data() + a.size());
}

ShockFamily family_from(const std::string& name) {
  const auto f = parse_shock_family(name);
  if (!f) throw InvalidArgument("unknown shock family '" + name + "'");
  return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Novelty-discounted multiplicative growth: simulation and estimation";

  // Translators run newest first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<DegenerateData>(m, "DegenerateData", base.ptr());
  py::register_exception<NotDecaying>(m, "NotDecaying", base.ptr());

  m.def("mix_seed", &mix_seed, py::arg("master_seed"), py::arg("story_index"));

  m.def("normalized_kww", [](double a, double b, int horizon) {
    const auto c = NoveltyCurve::normalized_kww(a, b, horizon);
    return std::vector<double>(c.values().begin(), c.values().end());
  }, py::arg("a"), py::arg("b"), py::arg("horizon"));

  m.def(
      "simulate",
      [](int stories, int horizon, std::uint64_t seed, double mu, double sigma2, double n0, double kww_a,
         double kww_b, const std::string& family, unsigned threads) {
        SimConfig cfg;
        cfg.n_stories = stories;
        cfg.horizon = horizon;
        cfg.n0 = n0;
        cfg.growth = GrowthParams(mu, sigma2);
        cfg.novelty = NoveltyCurve::normalized_kww(kww_a, kww_b, horizon);
        cfg.master_seed = seed;
        cfg.shock_family = family_from(family);
        cfg.threads = threads;
        Cohort cohort = [&] {
          py::gil_scoped_release release;
          return simulate_cohort(cfg);
        }();
        return counts_of(cohort);
      },
      py::arg("stories"), py::arg("horizon"), py::arg("seed"), py::arg("mu") = 0.05, py::arg("sigma2") = 0.0072,
      py::arg("n0") = 10.0, py::arg("kww_a") = 0.4, py::arg("kww_b") = 0.4, py::arg("family") = "gamma",
      py::arg("threads") = 0,
      "Counts array of shape (stories, horizon + 1) under r_t = exp(-a t^b) / exp(-a).");

  m.def("mean_variance_series", [](const Array& counts) {
    const auto s = mean_variance_series(cohort_from(counts));
    py::list out;
    for (const auto& p : s.points()) out.append(py::make_tuple(p.t, p.mean, p.variance));
    return out;
  }, py::arg("counts"), "List of (t, mean, variance) of log N_t - log N_0.");

  m.def("estimate_growth_ratio", [](const Array& counts) {
    const auto g = estimate_growth_ratio(mean_variance_series(cohort_from(counts)));
    return py::dict(py::arg("slope") = g.slope, py::arg("residual_rms") = g.residual_rms);
  }, py::arg("counts"));

  m.def("estimate_novelty", [](const Array& counts, int window) {
    const auto c = estimate_novelty(cohort_from(counts), window);
    return std::vector<double>(c.values().begin(), c.values().end());
  }, py::arg("counts"), py::arg("window") = 5, "r_1..r_T with r_1 = 1.");

  m.def("fit_kww", [](const Array& r, int t_min, int t_max) {
    const auto f = fit_kww(NoveltyCurve::estimated(to_vector(r)), t_min, t_max);
    return py::dict(py::arg("c") = f.params.c(), py::arg("a") = f.params.a(), py::arg("b") = f.params.b(),
                    py::arg("sse") = f.sse, py::arg("n_used") = f.n_used, py::arg("n_excluded") = f.n_excluded);
  }, py::arg("r"), py::arg("t_min"), py::arg("t_max"), "r[0] is r_1 and must equal 1.");

  m.def("half_life", [](double a, double b) { return half_life(a, b); }, py::arg("a"), py::arg("b"));
  m.def("kww_total_integral", &kww_total_integral, py::arg("a"), py::arg("b"));
  m.def("kww_partial_integral", &kww_partial_integral, py::arg("a"), py::arg("b"), py::arg("upper"),
        py::arg("rel_tol") = 1e-10);

  m.def("ks_test", [](const Array& values, double mean, double sd) {
    const auto v = to_vector(values);
    const auto r = ks_test(v, mean, sd);
    return py::make_tuple(r.d, r.p);
  }, py::arg("values"), py::arg("mean"), py::arg("sd"), "(d, p) against N(mean, sd^2).");

  m.def("fit_lognormal", [](const Array& values) {
    const auto v = to_vector(values);
    const auto f = fit_lognormal(v);
    return py::dict(py::arg("mu_log") = f.mu_log, py::arg("sigma_log") = f.sigma_log, py::arg("ks_stat") = f.ks_stat,
                    py::arg("p_value") = f.p_value, py::arg("n") = f.n);
  }, py::arg("values"));

  m.def("qq_points", [](const Array& values) {
    const auto v = to_vector(values);
    py::list out;
    for (const auto& p : qq_points(v)) out.append(py::make_tuple(p.theoretical_z, p.sample_value));
    return out;
  }, py::arg("values"));

  m.def(
      "roundtrip",
      [](std::uint64_t seed, int stories, int horizon, const std::string& family, unsigned threads) {
        RoundTripConfig cfg;
        cfg.seed = seed;
        cfg.stories = stories;
        cfg.horizon = horizon;
        cfg.family = family_from(family);
        cfg.threads = threads;
        cfg.fit_t_max = std::min(cfg.fit_t_max, horizon);
        cfg.lognormal_minute = std::min(cfg.lognormal_minute, horizon);
        RoundTripResult res = [&] {
          py::gil_scoped_release release;
          return run_roundtrip(cfg);
        }();
        py::list checks;
        for (const auto& c : res.checks) {
          checks.append(py::dict(py::arg("name") = c.name, py::arg("truth") = c.truth, py::arg("estimate") = c.estimate,
                                 py::arg("criterion") = c.criterion, py::arg("pass") = c.pass));
        }
        return py::dict(py::arg("checks") = checks, py::arg("model_implied_slope") = res.model_implied_slope,
                        py::arg("true_half_life") = res.true_half_life,
                        py::arg("fitted_half_life") = res.fitted_half_life);
      },
      py::arg("seed"), py::arg("stories") = 2000, py::arg("horizon") = 1440, py::arg("family") = "gamma",
      py::arg("threads") = 0);
}
