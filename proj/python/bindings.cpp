#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "plateau/analytics.hpp"
#include "plateau/brfs.hpp"
#include "plateau/crossover.hpp"
#include "plateau/errors.hpp"
#include "plateau/montecarlo.hpp"
#include "plateau/rational.hpp"
#include "plateau/rrw.hpp"
#include "plateau/task.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction (ints, strings and
// floats are accepted on input via their text form).
namespace pybind11::detail {

template <>
struct type_caster<plateau::Rational> {
  PYBIND11_TYPE_CASTER(plateau::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || src.is_none()) return false;
    if (!py::isinstance<py::str>(src) && !py::isinstance<py::int_>(src) && !py::isinstance<py::float_>(src) &&
        !py::isinstance(src, py::module_::import("fractions").attr("Fraction"))) {
      return false;
    }
    try {
      value = plateau::parse_rational(py::str(src).cast<std::string>());
    } catch (const plateau::ParseError&) {
      return false;
    }
    return true;
  }

  static handle cast(const plateau::Rational& r, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(plateau::to_fraction_string(r)).release();
  }
};

}  // namespace pybind11::detail

namespace {

plateau::TieMode tie_mode(const std::string& name) {
  if (name == "lexicographic") return plateau::TieMode::lexicographic;
  if (name == "random") return plateau::TieMode::uniform_random;
  throw plateau::InvalidInput("tie must be 'lexicographic' or 'random', got '" + name + "'");
}

py::dict expectation(const plateau::Expectation& e) {
  py::dict d;
  d["value"] = e.value;
  d["formula"] = std::string(plateau::formula_tag(e.formula));
  return d;
}

py::list series_list(const std::vector<plateau::SweepSeries>& series) {
  py::list out;
  for (const auto& s : series) {
    py::list points;
    for (const auto& p : s.points) points.append(py::make_tuple(p.x, p.y));
    py::dict d;
    d["name"] = s.name;
    d["x_label"] = s.x_label;
    d["y_label"] = s.y_label;
    d["points"] = points;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(plateau, m) {
  m.doc() = "Breadth-first search versus restarting random walks on plateaus";

  auto base = py::register_exception<plateau::Error>(m, "PlateauError", PyExc_RuntimeError);
  py::register_exception<plateau::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<plateau::NoExit>(m, "NoExit", base.ptr());
  py::register_exception<plateau::Unreachable>(m, "Unreachable", base.ptr());
  py::register_exception<plateau::NotLeveled>(m, "NotLeveled", base.ptr());
  py::register_exception<plateau::DeadEnd>(m, "DeadEnd", base.ptr());
  py::register_exception<plateau::MemoryBudgetExceeded>(m, "MemoryBudgetExceeded", base.ptr());

  py::class_<plateau::RunStats>(m, "RunStats")
      .def_readonly("goal_tests", &plateau::RunStats::goal_tests)
      .def_readonly("successor_generations", &plateau::RunStats::successor_generations)
      .def_readonly("found", &plateau::RunStats::found)
      .def_readonly("path", &plateau::RunStats::path)
      .def_readonly("walks", &plateau::RunStats::walks)
      .def_readonly("max_tested_level", &plateau::RunStats::max_tested_level)
      .def("__repr__", [](const plateau::RunStats& r) {
        return "RunStats(goal_tests=" + std::to_string(r.goal_tests) + ", found=" + (r.found ? "True" : "False") +
               ", walks=" + std::to_string(r.walks) + ")";
      });

  py::class_<plateau::EstimateSummary>(m, "EstimateSummary")
      .def_readonly("trials", &plateau::EstimateSummary::trials)
      .def_readonly("mean_exact", &plateau::EstimateSummary::mean_exact)
      .def_readonly("mean", &plateau::EstimateSummary::mean)
      .def_readonly("variance", &plateau::EstimateSummary::variance)
      .def_readonly("std_error", &plateau::EstimateSummary::std_error)
      .def_readonly("ci_low", &plateau::EstimateSummary::ci_low)
      .def_readonly("ci_high", &plateau::EstimateSummary::ci_high)
      .def_readonly("confidence", &plateau::EstimateSummary::confidence)
      .def_readonly("base_seed", &plateau::EstimateSummary::base_seed)
      .def_readonly("budget_exceeded", &plateau::EstimateSummary::budget_exceeded)
      .def_readonly("accounting_violations", &plateau::EstimateSummary::accounting_violations)
      .def_readonly("depth_violations", &plateau::EstimateSummary::depth_violations);

  m.def("expected_brfs_tree",
        [](std::uint64_t b, std::uint32_t d, std::uint64_t g) { return expectation(plateau::expected_brfs_tree(b, d, g)); },
        py::arg("b"), py::arg("depth"), py::arg("goals"));
  m.def("expected_rrw_tree",
        [](std::uint64_t b, std::uint32_t d, std::uint64_t g, const plateau::Rational& e) {
          return expectation(plateau::expected_rrw_tree(b, d, g, e));
        },
        py::arg("b"), py::arg("depth"), py::arg("goals"), py::arg("error") = plateau::Rational(1));
  m.def("expected_brfs_general",
        [](std::uint64_t shallow, std::uint64_t at_level, std::uint64_t g) {
          return expectation(plateau::expected_brfs_general(shallow, at_level, g));
        },
        py::arg("shallow"), py::arg("at_level"), py::arg("goals"));
  m.def("expected_rrw_general",
        [](std::uint32_t d, const plateau::Rational& e, const plateau::Rational& s) {
          return expectation(plateau::expected_rrw_general(d, e, plateau::SuccessProbability(s)));
        },
        py::arg("depth"), py::arg("error"), py::arg("success"));

  m.def("crossover_bound",
        [](std::uint64_t b, std::uint32_t d, const plateau::Rational& e) {
          const auto bound = plateau::crossover_bound(b, d, e);
          return py::make_tuple(bound.goals, std::string(plateau::bound_source_name(bound.source)));
        },
        py::arg("b"), py::arg("depth"), py::arg("error") = plateau::Rational(1));
  m.def("empirical_crossover",
        [](std::uint64_t b, std::uint32_t d, const plateau::Rational& e, bool strict) {
          return plateau::empirical_crossover(
              b, d, e, strict ? plateau::Comparison::strictly_less : plateau::Comparison::at_most);
        },
        py::arg("b"), py::arg("depth"), py::arg("error") = plateau::Rational(1), py::arg("strict") = false);
  m.def("density_crossover", &plateau::density_crossover, py::arg("b"), py::arg("depth"),
        py::arg("error") = plateau::Rational(1));

  m.def("sweep_expected_tests",
        [](std::uint64_t b, std::uint32_t d, const std::vector<plateau::Rational>& errors, std::uint64_t first,
           std::uint64_t last) { return series_list(plateau::sweep_expected_tests(b, d, errors, first, last)); },
        py::arg("b"), py::arg("depth"), py::arg("errors"), py::arg("first_goals"), py::arg("last_goals"));
  m.def("sweep_crossover",
        [](std::uint64_t b, std::uint32_t first, std::uint32_t last, const std::vector<plateau::Rational>& errors) {
          return series_list(plateau::sweep_crossover(b, first, last, errors));
        },
        py::arg("b"), py::arg("first_depth"), py::arg("last_depth"), py::arg("errors"));
  m.def("sweep_density",
        [](std::uint64_t b, std::uint32_t first, std::uint32_t last, const std::vector<plateau::Rational>& errors) {
          return series_list(plateau::sweep_density(b, first, last, errors));
        },
        py::arg("b"), py::arg("first_depth"), py::arg("last_depth"), py::arg("errors"));

  m.def("run_brfs_tree",
        [](std::uint64_t b, std::uint32_t d, std::uint64_t g, std::uint64_t seed, const std::string& tie,
           std::uint64_t tie_seed) {
          return plateau::run_brfs(plateau::make_tree_task({b, d, g, seed}), {.tie = {tie_mode(tie), tie_seed}});
        },
        py::arg("b"), py::arg("depth"), py::arg("goals"), py::arg("seed"), py::arg("tie") = "lexicographic",
        py::arg("tie_seed") = 0);
  m.def("run_rrw_tree",
        [](std::uint64_t b, std::uint32_t d, std::uint64_t g, std::uint64_t seed, const plateau::Rational& e,
           std::uint64_t walk_seed, std::uint64_t max_walks) {
          return plateau::run_rrw(plateau::make_tree_task({b, d, g, seed}), {e, walk_seed, max_walks});
        },
        py::arg("b"), py::arg("depth"), py::arg("goals"), py::arg("seed"), py::arg("error") = plateau::Rational(1),
        py::arg("walk_seed") = 0, py::arg("max_walks") = plateau::kDefaultMaxWalks);
  m.def("run_brfs_graph",
        [](std::vector<std::vector<plateau::Vertex>> adjacency, plateau::Vertex initial,
           std::vector<plateau::Vertex> goals, const std::string& tie, std::uint64_t tie_seed) {
          return plateau::run_brfs(plateau::GraphTask(std::move(adjacency), initial, std::move(goals)),
                                   {.tie = {tie_mode(tie), tie_seed}});
        },
        py::arg("adjacency"), py::arg("initial"), py::arg("goals"), py::arg("tie") = "lexicographic",
        py::arg("tie_seed") = 0);
  m.def("run_rrw_graph",
        [](std::vector<std::vector<plateau::Vertex>> adjacency, plateau::Vertex initial,
           std::vector<plateau::Vertex> goals, const plateau::Rational& e, std::uint64_t walk_seed,
           std::uint64_t max_walks) {
          return plateau::run_rrw(plateau::GraphTask(std::move(adjacency), initial, std::move(goals)),
                                  {e, walk_seed, max_walks});
        },
        py::arg("adjacency"), py::arg("initial"), py::arg("goals"), py::arg("error") = plateau::Rational(1),
        py::arg("walk_seed") = 0, py::arg("max_walks") = plateau::kDefaultMaxWalks);
  m.def("dp_success_probability",
        [](std::vector<std::vector<plateau::Vertex>> adjacency, plateau::Vertex initial,
           std::vector<plateau::Vertex> goals, std::uint64_t depth) {
          return plateau::dp_success_probability(plateau::GraphTask(std::move(adjacency), initial, std::move(goals)),
                                                 depth);
        },
        py::arg("adjacency"), py::arg("initial"), py::arg("goals"), py::arg("depth"));

  m.def("estimate_brfs",
        [](std::uint64_t b, std::uint32_t d, std::uint64_t g, std::uint64_t trials, std::uint64_t seed,
           const std::string& tie, double confidence, unsigned threads) {
          py::gil_scoped_release release;
          return plateau::estimate_brfs({b, d, g}, tie_mode(tie),
                                        {.trials = trials, .base_seed = seed, .confidence = confidence, .threads = threads});
        },
        py::arg("b"), py::arg("depth"), py::arg("goals"), py::arg("trials"), py::arg("seed"),
        py::arg("tie") = "lexicographic", py::arg("confidence") = 0.95, py::arg("threads") = 1);
  m.def("estimate_rrw",
        [](std::uint64_t b, std::uint32_t d, std::uint64_t g, std::uint64_t trials, std::uint64_t seed,
           const plateau::Rational& e, double confidence, unsigned threads, std::uint64_t max_walks) {
          py::gil_scoped_release release;
          return plateau::estimate_rrw({b, d, g}, e,
                                       {.trials = trials,
                                        .base_seed = seed,
                                        .confidence = confidence,
                                        .threads = threads,
                                        .max_walks = max_walks});
        },
        py::arg("b"), py::arg("depth"), py::arg("goals"), py::arg("trials"), py::arg("seed"),
        py::arg("error") = plateau::Rational(1), py::arg("confidence") = 0.95, py::arg("threads") = 1,
        py::arg("max_walks") = plateau::kDefaultMaxWalks);
  m.def("validate",
        [](std::uint64_t b, std::uint32_t d, std::uint64_t g, std::uint64_t trials, std::uint64_t seed,
           std::optional<plateau::Rational> e, double z_threshold, const std::string& tie) {
          plateau::ValidationReport v;
          {
            py::gil_scoped_release release;
            v = plateau::validate({b, d, g}, e, {.trials = trials, .base_seed = seed}, z_threshold, tie_mode(tie));
          }
          py::dict out = expectation(v.analytic);
          out["estimate"] = v.estimate;
          out["z_score"] = v.z_score;
          out["z_threshold"] = v.z_threshold;
          out["passed"] = v.pass;
          return out;
        },
        py::arg("b"), py::arg("depth"), py::arg("goals"), py::arg("trials"), py::arg("seed"),
        py::arg("error") = py::none(), py::arg("z_threshold") = 4.0, py::arg("tie") = "lexicographic");
}
