#include "plateau/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plateau/analytics.hpp"
#include "plateau/brfs.hpp"
#include "plateau/crossover.hpp"
#include "plateau/errors.hpp"
#include "plateau/montecarlo.hpp"
#include "plateau/rational.hpp"
#include "plateau/rrw.hpp"
#include "plateau/task.hpp"

namespace plateau::cli {
namespace {

using Json = nlohmann::ordered_json;

// Flag values that parse but are malformed (ranges, rationals) are usage
// errors, reported like CLI11's own parse failures.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A walk budget ran out; treated like an engine error for the exit code.
class BudgetFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "table";
  int precision = 6;
  std::string path;
};

struct TreeFlags {
  std::uint64_t branching = 0;
  std::uint32_t depth = 0;
  std::uint64_t goals = 0;
  std::string error = "1";
};

struct SimFlags {
  std::string alg = "brfs";
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  bool nondeterministic = false;
  std::string tie = "lexicographic";
  double confidence = 0.95;
  unsigned threads = 1;
  std::uint64_t max_walks = kDefaultMaxWalks;
  double z_threshold = 4;
};

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<Rational> error_list(const std::string& text) {
  if (text.empty()) return default_depth_errors();
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(rational_flag(item, "--errors"));
  if (out.empty()) throw UsageError("--errors: empty list");
  return out;
}

std::pair<std::uint64_t, std::uint64_t> range_flag(const std::string& text, const char* flag) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError(std::string(flag) + ": expected 'a..b' or 'a', got '" + text + "'");
    }
    return std::stoull(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

std::uint32_t level_flag(std::uint64_t value, const char* flag) {
  if (value > 64) throw InvalidInput(std::string(flag) + ": goal level " + std::to_string(value) + " is out of range");
  return static_cast<std::uint32_t>(value);
}

std::string fixed(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

std::string exact_and_decimal(const Rational& v, int precision) {
  return to_fraction_string(v) + " (" + to_decimal_string(v, precision) + ")";
}

void emit(const Output& output, const std::string& text, std::ostream& out) {
  if (output.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output.path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputFailure("cannot open '" + output.path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw OutputFailure("failed writing '" + output.path + "'");
}

void add_output_flags(CLI::App* cmd, Output& output, bool table_allowed = true) {
  std::vector<std::string> kinds{"csv", "json"};
  if (table_allowed) kinds.emplace_back("table");
  cmd->add_option("--format", output.format, "Output format")->check(CLI::IsMember(kinds));
  cmd->add_option("--precision", output.precision, "Decimal digits")->check(CLI::Range(0, 100));
  cmd->add_option("--out", output.path, "Write output to PATH instead of stdout");
}

// ---------------------------------------------------------------- expect

struct ExpectFlags {
  std::string alg = "brfs";
  TreeFlags tree;
  std::optional<std::string> shallow;
  std::optional<std::string> at_level;
  std::optional<std::string> success;
};

std::string render_expectations(const std::vector<std::pair<std::string, Expectation>>& results, const Output& o) {
  std::ostringstream s;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& [alg, e] : results) {
      arr.push_back({{"algorithm", alg},
                     {"formula", std::string(formula_tag(e.formula))},
                     {"value_exact", to_fraction_string(e.value)},
                     {"value_decimal", to_decimal_string(e.value, o.precision)}});
    }
    s << Json{{"expectations", arr}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    s << "algorithm,formula,value_exact,value_decimal\n";
    for (const auto& [alg, e] : results) {
      s << alg << ',' << formula_tag(e.formula) << ',' << to_fraction_string(e.value) << ','
        << to_decimal_string(e.value, o.precision) << "\n";
    }
  } else if (results.size() == 1) {
    s << exact_and_decimal(results.front().second.value, o.precision) << "\n";
  } else {
    for (const auto& [alg, e] : results) s << alg << ": " << exact_and_decimal(e.value, o.precision) << "\n";
  }
  return s.str();
}

int cmd_expect(const ExpectFlags& f, const Output& o, std::ostream& out) {
  std::vector<std::pair<std::string, Expectation>> results;
  const bool want_brfs = f.alg == "brfs" || f.alg == "both";
  const bool want_rrw = f.alg == "rrw" || f.alg == "both";
  if (want_brfs) {
    if (f.shallow || f.at_level) {
      if (!f.shallow || !f.at_level) throw UsageError("--shallow and --at-level must be given together");
      const Rational shallow = rational_flag(*f.shallow, "--shallow");
      const Rational at_level = rational_flag(*f.at_level, "--at-level");
      if (!is_integer(shallow) || !is_integer(at_level)) throw InvalidInput("vertex counts must be integers");
      results.emplace_back("brfs", expected_brfs_general(numerator(shallow), numerator(at_level), f.tree.goals));
    } else {
      results.emplace_back("brfs", expected_brfs_tree(f.tree.branching, f.tree.depth, f.tree.goals));
    }
  }
  if (want_rrw) {
    const Rational e = rational_flag(f.tree.error, "--error");
    if (f.success) {
      const SuccessProbability s(rational_flag(*f.success, "--success"));
      results.emplace_back("rrw", expected_rrw_general(f.tree.depth, e, s));
    } else {
      results.emplace_back("rrw", expected_rrw_tree(f.tree.branching, f.tree.depth, f.tree.goals, e));
    }
  }
  emit(o, render_expectations(results, o), out);
  return kOk;
}

// ---------------------------------------------------------------- crossover

int cmd_crossover(const TreeFlags& f, bool strict, const Output& o, std::ostream& out) {
  const Rational e = rational_flag(f.error, "--error");
  const CrossoverReport r = crossover_report(f.branching, f.depth, e);
  std::optional<std::uint64_t> strict_exact;
  if (strict) strict_exact = empirical_crossover(f.branching, f.depth, e, Comparison::strictly_less);

  std::ostringstream s;
  if (o.format == "json") {
    Json j{{"branching", r.branching},
           {"goal_level", r.goal_level},
           {"depth_error", to_fraction_string(r.depth_error)},
           {"bound", r.bound},
           {"bound_source", std::string(bound_source_name(r.bound_source))},
           {"exact", r.exact},
           {"density_bound", to_fraction_string(r.density_bound)},
           {"density_exact", to_fraction_string(r.density_exact)},
           {"note", r.note}};
    if (strict) j["exact_strict"] = strict_exact ? Json(*strict_exact) : Json(nullptr);
    s << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    s << "branching,goal_level,depth_error,bound,bound_source,exact,density_bound,density_exact\n";
    s << r.branching << ',' << r.goal_level << ',' << to_fraction_string(r.depth_error) << ',' << r.bound << ','
      << bound_source_name(r.bound_source) << ',' << r.exact << ',' << to_fraction_string(r.density_bound) << ','
      << to_fraction_string(r.density_exact) << "\n";
  } else {
    s << "b=" << r.branching << " depth=" << r.goal_level << " error=" << to_fraction_string(r.depth_error) << "\n";
    s << "bound=" << r.bound << " (" << bound_source_name(r.bound_source) << ")\n";
    s << "exact=" << r.exact << "\n";
    if (strict) s << "exact_strict=" << (strict_exact ? std::to_string(*strict_exact) : "none") << "\n";
    s << "density=" << exact_and_decimal(r.density_bound, o.precision) << "\n";
    s << "density_exact=" << exact_and_decimal(r.density_exact, o.precision) << "\n";
    if (!r.note.empty()) s << "note: " << r.note << "\n";
  }
  emit(o, s.str(), out);
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepFlags {
  std::string kind;
  std::uint64_t branching = 0;
  std::uint32_t depth = 0;
  std::string depths;
  std::string errors;
  std::string goals;
};

std::string render_series(const std::string& kind, const std::vector<SweepSeries>& series, const Output& o) {
  std::ostringstream s;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& ser : series) {
      Json config = Json::object();
      for (const auto& [k, v] : ser.config) config[k] = v;
      Json points = Json::array();
      for (const auto& p : ser.points) {
        points.push_back({{"x", p.x},
                          {"value_exact", to_fraction_string(p.y)},
                          {"value_decimal", to_decimal_string(p.y, o.precision)}});
      }
      arr.push_back({{"name", ser.name},
                     {"x_label", ser.x_label},
                     {"y_label", ser.y_label},
                     {"config", config},
                     {"points", points}});
    }
    s << Json{{"kind", kind}, {"series", arr}}.dump(2) << "\n";
    return s.str();
  }
  s << "x,series,value_exact,value_decimal\n";
  for (const auto& ser : series) {
    for (const auto& p : ser.points) {
      s << p.x << ',' << ser.name << ',' << to_fraction_string(p.y) << ',' << to_decimal_string(p.y, o.precision)
        << "\n";
    }
  }
  return s.str();
}

int cmd_sweep(const SweepFlags& f, const Output& o, std::ostream& out) {
  const std::vector<Rational> errors = error_list(f.errors);
  std::vector<SweepSeries> series;
  if (f.kind == "tests") {
    if (f.depth == 0) throw UsageError("--depth is required for --kind tests");
    if (f.goals.empty()) throw UsageError("--goals is required for --kind tests");
    const auto [g0, g1] = range_flag(f.goals, "--goals");
    series = sweep_expected_tests(f.branching, f.depth, errors, g0, g1);
  } else {
    if (f.depths.empty()) throw UsageError("--depths is required for --kind " + f.kind);
    const auto [d0, d1] = range_flag(f.depths, "--depths");
    const auto first = level_flag(d0, "--depths");
    const auto last = level_flag(d1, "--depths");
    series = f.kind == "crossover" ? sweep_crossover(f.branching, first, last, errors)
                                   : sweep_density(f.branching, first, last, errors);
  }
  emit(o, render_series(f.kind, series, o), out);
  return kOk;
}

// ---------------------------------------------------------------- simulate / validate

std::uint64_t resolve_seed(const SimFlags& f) {
  if (f.seed) return *f.seed;
  if (!f.nondeterministic) throw UsageError("--seed is required (or pass --nondeterministic)");
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

TieMode tie_mode(const std::string& name) {
  return name == "random" ? TieMode::uniform_random : TieMode::lexicographic;
}

Json summary_json(const EstimateSummary& e, int precision) {
  return Json{{"trials", e.trials},
              {"base_seed", e.base_seed},
              {"mean_exact", to_fraction_string(e.mean_exact)},
              {"mean", fixed(e.mean, precision)},
              {"variance", fixed(e.variance, precision)},
              {"std_error", fixed(e.std_error, precision)},
              {"confidence", fixed(e.confidence, 4)},
              {"ci_low", fixed(e.ci_low, precision)},
              {"ci_high", fixed(e.ci_high, precision)},
              {"budget_exceeded", e.budget_exceeded},
              {"accounting_violations", e.accounting_violations},
              {"depth_violations", e.depth_violations}};
}

void summary_table(std::ostream& s, const EstimateSummary& e, int precision) {
  s << "trials=" << e.trials << " seed=" << e.base_seed << "\n";
  s << "mean=" << fixed(e.mean, precision) << " exact=" << to_fraction_string(e.mean_exact) << "\n";
  s << "variance=" << fixed(e.variance, precision) << "\n";
  s << "std_error=" << fixed(e.std_error, precision) << "\n";
  s << "ci(" << fixed(e.confidence, 4) << ")=[" << fixed(e.ci_low, precision) << ", " << fixed(e.ci_high, precision)
    << "]\n";
  s << "budget_exceeded=" << e.budget_exceeded << "\n";
}

std::string header_line(const SimFlags& f, const TreeFlags& t) {
  std::string s = "algorithm=" + f.alg + " b=" + std::to_string(t.branching) + " depth=" + std::to_string(t.depth) +
                  " goals=" + std::to_string(t.goals);
  if (f.alg == "rrw") s += " error=" + t.error;
  if (f.alg == "brfs") s += " tie=" + f.tie;
  return s + "\n";
}

int cmd_simulate(const SimFlags& f, const TreeFlags& t, bool validating, const Output& o, std::ostream& out) {
  const SimulationOptions options{.trials = f.trials,
                                  .base_seed = resolve_seed(f),
                                  .confidence = f.confidence,
                                  .threads = f.threads,
                                  .max_walks = f.max_walks};
  const TreeShape shape{t.branching, t.depth, t.goals};
  std::optional<Rational> e;
  if (f.alg == "rrw") e = rational_flag(t.error, "--error");

  std::ostringstream s;
  int code = kOk;
  EstimateSummary estimate;
  if (validating) {
    const ValidationReport r = validate(shape, e, options, f.z_threshold, tie_mode(f.tie));
    estimate = r.estimate;
    if (o.format == "json") {
      s << Json{{"algorithm", f.alg},
                {"analytic", {{"formula", std::string(formula_tag(r.analytic.formula))},
                              {"value_exact", to_fraction_string(r.analytic.value)},
                              {"value_decimal", to_decimal_string(r.analytic.value, o.precision)}}},
                {"estimate", summary_json(r.estimate, o.precision)},
                {"z_score", fixed(r.z_score, o.precision)},
                {"z_threshold", fixed(r.z_threshold, o.precision)},
                {"pass", r.pass}}
               .dump(2)
        << "\n";
    } else {
      s << header_line(f, t);
      s << "analytic=" << exact_and_decimal(r.analytic.value, o.precision) << " [" << formula_tag(r.analytic.formula)
        << "]\n";
      summary_table(s, r.estimate, o.precision);
      s << "z=" << fixed(r.z_score, o.precision) << " threshold=" << fixed(r.z_threshold, o.precision) << "\n";
      s << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    if (!r.pass) code = kValidationFailed;
  } else {
    estimate = e ? estimate_rrw(shape, *e, options) : estimate_brfs(shape, tie_mode(f.tie), options);
    if (o.format == "json") {
      Json j = summary_json(estimate, o.precision);
      j["algorithm"] = f.alg;
      s << j.dump(2) << "\n";
    } else {
      s << header_line(f, t);
      summary_table(s, estimate, o.precision);
    }
  }
  emit(o, s.str(), out);
  if (estimate.budget_exceeded > 0) {
    throw BudgetFailure(std::to_string(estimate.budget_exceeded) + " trial(s) exhausted the walk budget of " +
                        std::to_string(f.max_walks));
  }
  return code;
}

// ---------------------------------------------------------------- graph-run

struct GraphFlags {
  std::string file;
  std::string alg = "both";
  std::string error = "1";
  std::optional<std::uint64_t> seed;
  bool nondeterministic = false;
  std::string tie = "lexicographic";
  std::uint64_t max_walks = kDefaultMaxWalks;
};

Json stats_json(const RunStats& r) {
  return Json{{"found", r.found},
              {"goal_tests", r.goal_tests},
              {"successor_generations", r.successor_generations},
              {"walks", r.walks},
              {"path", r.path}};
}

int cmd_graph_run(const GraphFlags& f, const Output& o, std::ostream& out) {
  std::ifstream in(f.file);
  if (!in) throw InvalidInput("cannot read graph file '" + f.file + "'");
  const GraphTask task = read_graph(in);
  const LevelCounts counts = level_counts(task);
  const bool want_brfs = f.alg == "brfs" || f.alg == "both";
  const bool want_rrw = f.alg == "rrw" || f.alg == "both";

  Json j{{"goal_level", counts.goal_level},
         {"shallow_count", counts.shallow_count},
         {"goal_level_count", counts.goal_level_count},
         {"goal_count_at_level", counts.goal_count_at_level},
         {"deeper_goal_count", counts.deeper_goal_count}};
  std::vector<std::string> warnings;
  if (counts.deeper_goal_count > 0) {
    warnings.push_back("goals below the goal level: closed forms assume all goals at the goal level");
  }
  bool exhausted = false;

  if (want_brfs) {
    const std::uint64_t seed = f.tie == "random" ? resolve_seed({.seed = f.seed, .nondeterministic = f.nondeterministic}) : 0;
    const RunStats r = run_brfs(task, BrfsOptions{.tie = {tie_mode(f.tie), seed}});
    const Expectation e = expected_brfs_general(counts.shallow_count, counts.goal_level_count, counts.goal_count_at_level);
    j["brfs"] = stats_json(r);
    j["brfs"]["expected_exact"] = to_fraction_string(e.value);
    j["brfs"]["expected_decimal"] = to_decimal_string(e.value, o.precision);
  }
  if (want_rrw) {
    const Rational e = rational_flag(f.error, "--error");
    const std::uint64_t seed = resolve_seed({.seed = f.seed, .nondeterministic = f.nondeterministic});
    const RunStats r = run_rrw(task, RrwConfig{e, seed, f.max_walks});
    exhausted = !r.found;
    j["rrw"] = stats_json(r);
    j["rrw"]["seed"] = seed;
    try {
      const Rational s = dp_success_probability(task, walk_depth(counts.goal_level, e));
      j["rrw"]["success_probability"] = to_fraction_string(s);
      if (s > 0) {
        const Expectation ex = expected_rrw_general(counts.goal_level, e, SuccessProbability(s));
        j["rrw"]["expected_exact"] = to_fraction_string(ex.value);
        j["rrw"]["expected_decimal"] = to_decimal_string(ex.value, o.precision);
      }
    } catch (const NotLeveled& err) {
      warnings.push_back(std::string("no exact success probability: ") + err.what());
    }
  }
  j["warnings"] = warnings;

  std::ostringstream s;
  if (o.format == "json") {
    s << j.dump(2) << "\n";
  } else {
    s << "goal_level=" << counts.goal_level << " shallow=" << counts.shallow_count
      << " at_level=" << counts.goal_level_count << " goals_at_level=" << counts.goal_count_at_level << "\n";
    for (const char* alg : {"brfs", "rrw"}) {
      if (!j.contains(alg)) continue;
      const Json& r = j[alg];
      s << alg << ": found=" << (r["found"].get<bool>() ? "yes" : "no") << " goal_tests=" << r["goal_tests"]
        << " successor_generations=" << r["successor_generations"] << " walks=" << r["walks"] << " path="
        << r["path"].dump();
      if (r.contains("expected_exact")) {
        s << " expected=" << r["expected_exact"].get<std::string>() << " (" << r["expected_decimal"].get<std::string>()
          << ")";
      }
      s << "\n";
    }
    for (const auto& w : warnings) s << "warning: " << w << "\n";
  }
  emit(o, s.str(), out);
  if (exhausted) throw BudgetFailure("random walks exhausted the walk budget of " + std::to_string(f.max_walks));
  return kOk;
}

void add_tree_flags(CLI::App* cmd, TreeFlags& t, bool with_error) {
  cmd->add_option("--b", t.branching, "Branching factor")->required();
  cmd->add_option("--depth", t.depth, "Goal level d*")->required();
  cmd->add_option("--goals", t.goals, "Number of goals g");
  if (with_error) cmd->add_option("--error", t.error, "Depth error e, e.g. 1, 1.5 or 3/2");
}

void add_sim_flags(CLI::App* cmd, SimFlags& s, TreeFlags& t) {
  cmd->add_option("--alg", s.alg, "Algorithm")->check(CLI::IsMember({"brfs", "rrw"}));
  add_tree_flags(cmd, t, true);
  cmd->get_option("--goals")->required();
  cmd->add_option("--trials", s.trials, "Number of trials")->required()->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  cmd->add_option("--seed", s.seed, "Base seed");
  cmd->add_flag("--nondeterministic", s.nondeterministic, "Draw the base seed from the system");
  cmd->add_option("--tie", s.tie, "BrFS tie-breaking")->check(CLI::IsMember({"lexicographic", "random"}));
  cmd->add_option("--confidence", s.confidence, "Confidence level of the interval");
  cmd->add_option("--threads", s.threads, "Worker threads (0: all cores)");
  cmd->add_option("--max-walks", s.max_walks, "Walk budget per RRW trial")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected goal-test analysis of breadth-first search and restarting random walks"};
  app.require_subcommand(1);

  Output output;
  ExpectFlags expect;
  TreeFlags cross;
  bool strict = false;
  SweepFlags sweep;
  SimFlags sim;
  TreeFlags sim_tree;
  GraphFlags graph;

  auto* expect_cmd = app.add_subcommand("expect", "Exact expected goal tests");
  expect_cmd->add_option("--alg", expect.alg, "Algorithm")->check(CLI::IsMember({"brfs", "rrw", "both"}));
  expect_cmd->add_option("--b", expect.tree.branching, "Branching factor");
  expect_cmd->add_option("--depth", expect.tree.depth, "Goal level d*");
  expect_cmd->add_option("--goals", expect.tree.goals, "Number of goals g");
  expect_cmd->add_option("--error", expect.tree.error, "Depth error e");
  expect_cmd->add_option("--shallow", expect.shallow, "General BrFS form: vertices above the goal level");
  expect_cmd->add_option("--at-level", expect.at_level, "General BrFS form: vertices at the goal level");
  expect_cmd->add_option("--success", expect.success, "General RRW form: success probability s");
  add_output_flags(expect_cmd, output);

  auto* cross_cmd = app.add_subcommand("crossover", "Crossover bound and exact crossover");
  add_tree_flags(cross_cmd, cross, true);
  cross_cmd->add_flag("--strict", strict, "Also report the strict-inequality crossover");
  add_output_flags(cross_cmd, output);

  auto* sweep_cmd = app.add_subcommand("sweep", "Series for expected tests, crossover and density plots");
  sweep_cmd->add_option("--kind", sweep.kind, "Sweep kind")->required()->check(CLI::IsMember({"tests", "crossover", "density"}));
  sweep_cmd->add_option("--b", sweep.branching, "Branching factor")->required();
  sweep_cmd->add_option("--depth", sweep.depth, "Goal level (tests sweep)");
  sweep_cmd->add_option("--depths", sweep.depths, "Goal level range, e.g. 2..8");
  sweep_cmd->add_option("--errors", sweep.errors, "Comma-separated depth errors (default 1,3/2,2)");
  sweep_cmd->add_option("--goals", sweep.goals, "Goal count range, e.g. 1..64");
  add_output_flags(sweep_cmd, output, false);

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of expected goal tests");
  add_sim_flags(sim_cmd, sim, sim_tree);
  add_output_flags(sim_cmd, output);

  auto* val_cmd = app.add_subcommand("validate", "Compare a Monte Carlo estimate with the closed form");
  add_sim_flags(val_cmd, sim, sim_tree);
  val_cmd->add_option("--z-threshold", sim.z_threshold, "Largest accepted |z|");
  add_output_flags(val_cmd, output);

  auto* graph_cmd = app.add_subcommand("graph-run", "Run BrFS and/or RRW on an explicit graph file");
  graph_cmd->add_option("--file", graph.file, "Graph file")->required();
  graph_cmd->add_option("--alg", graph.alg, "Algorithm")->check(CLI::IsMember({"brfs", "rrw", "both"}));
  graph_cmd->add_option("--error", graph.error, "Depth error e");
  graph_cmd->add_option("--seed", graph.seed, "Walk seed");
  graph_cmd->add_flag("--nondeterministic", graph.nondeterministic, "Draw the seed from the system");
  graph_cmd->add_option("--tie", graph.tie, "BrFS tie-breaking")->check(CLI::IsMember({"lexicographic", "random"}));
  graph_cmd->add_option("--max-walks", graph.max_walks, "Walk budget")->check(CLI::PositiveNumber);
  add_output_flags(graph_cmd, output);

  std::vector<std::string> argv_storage{"plateau"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadFlags;
  }
  for (auto* cmd : {expect_cmd, cross_cmd, sweep_cmd, sim_cmd, val_cmd, graph_cmd}) {
    if (cmd->parsed() && cmd->get_option("--format")->count() == 0) output.format = cmd == sweep_cmd ? "csv" : "table";
  }

  try {
    if (expect_cmd->parsed()) {
      auto given = [&](const char* name) { return expect_cmd->get_option(name)->count() > 0; };
      const bool general_brfs = expect.shallow || expect.at_level;
      const bool general_rrw = expect.success.has_value();
      const bool tree_form = (expect.alg != "rrw" && !general_brfs) || (expect.alg != "brfs" && !general_rrw);
      if (tree_form && !(given("--b") && given("--depth") && given("--goals"))) {
        throw UsageError("--b, --depth and --goals are required");
      }
      if (general_brfs && !given("--goals")) throw UsageError("--goals is required");
      if (general_rrw && !given("--depth")) throw UsageError("--depth is required");
      return cmd_expect(expect, output, out);
    }
    if (cross_cmd->parsed()) return cmd_crossover(cross, strict, output, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, output, out);
    if (sim_cmd->parsed()) return cmd_simulate(sim, sim_tree, false, output, out);
    if (val_cmd->parsed()) return cmd_simulate(sim, sim_tree, true, output, out);
    if (graph_cmd->parsed()) return cmd_graph_run(graph, output, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kBadFlags;
  } catch (const OutputFailure& e) {
    err << "error: " << e.what() << "\n";
    return kOutputError;
  } catch (const BudgetFailure& e) {
    err << "error: " << e.what() << "\n";
    return kEngineError;
  } catch (const DeadEnd& e) {
    err << "error: dead end: " << e.what() << "\n";
    return kEngineError;
  } catch (const MemoryBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kEngineError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kBadFlags;
}

}  // namespace plateau::cli
