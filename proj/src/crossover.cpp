#include "plateau/crossover.hpp"

#include <string>

#include "plateau/analytics.hpp"
#include "plateau/errors.hpp"
#include "plateau/rrw.hpp"
#include "plateau/task.hpp"

namespace plateau {
namespace {

constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 16;

void validate(std::uint64_t branching, std::uint32_t goal_level, const Rational& depth_error) {
  if (branching < 2) throw InvalidInput("branching factor must be at least 2");
  if (goal_level < 1) throw InvalidInput("goal level must be at least 1");
  walk_depth(goal_level, depth_error);
}

bool rrw_wins(std::uint64_t b, std::uint32_t d, std::uint64_t g, const Rational& e, Comparison comparison) {
  const Rational brfs = expected_brfs_tree(b, d, g).value;
  const Rational rrw = expected_rrw_tree(b, d, g, e).value;
  return comparison == Comparison::at_most ? rrw <= brfs : rrw < brfs;
}

std::string series_suffix(const Rational& e) { return "e=" + to_fraction_string(e); }

std::vector<std::pair<std::string, std::string>> sweep_config(std::uint64_t b, const Rational& e) {
  return {{"branching", std::to_string(b)}, {"depth_error", to_fraction_string(e)}};
}

}  // namespace

std::string_view bound_source_name(BoundSource source) {
  switch (source) {
    case BoundSource::linear_bound: return "linear-bound";
    case BoundSource::goal_level_two: return "goal-level-two";
    case BoundSource::goal_level_one: return "goal-level-one-equality";
    case BoundSource::empirical_fallback: return "empirical-fallback";
  }
  return "?";
}

CrossoverBound crossover_bound(std::uint64_t branching, std::uint32_t goal_level, const Rational& depth_error) {
  validate(branching, goal_level, depth_error);
  const std::uint64_t t = walk_depth(goal_level, depth_error);
  if (goal_level >= 2 && t > 2) return {(t - 1) * (branching - 1) + 1, BoundSource::linear_bound};
  if (goal_level == 2) return {(t - 1) * (branching - 1) + 2, BoundSource::goal_level_two};
  if (depth_error == 1) return {branching, BoundSource::goal_level_one};
  const auto exact = empirical_crossover(branching, goal_level, depth_error);
  // With the at-most comparison g = b^d* always qualifies.
  return {exact.value_or(checked_pow(branching, goal_level)), BoundSource::empirical_fallback};
}

std::optional<std::uint64_t> empirical_crossover(std::uint64_t branching, std::uint32_t goal_level,
                                                 const Rational& depth_error, Comparison comparison) {
  validate(branching, goal_level, depth_error);
  const std::uint64_t level_size = checked_pow(branching, goal_level);
  if (level_size <= kScanLimit) {
    for (std::uint64_t g = 1; g <= level_size; ++g) {
      if (rrw_wins(branching, goal_level, g, depth_error, comparison)) return g;
    }
    return std::nullopt;
  }
  if (!rrw_wins(branching, goal_level, level_size, depth_error, comparison)) return std::nullopt;
  std::uint64_t lo = 1;  // candidates in [lo, hi]; hi always wins
  std::uint64_t hi = level_size;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (rrw_wins(branching, goal_level, mid, depth_error, comparison)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Rational density_crossover(std::uint64_t branching, std::uint32_t goal_level, const Rational& depth_error) {
  const CrossoverBound bound = crossover_bound(branching, goal_level, depth_error);
  return Rational(Integer(bound.goals), pow_integer(branching, goal_level));
}

CrossoverReport crossover_report(std::uint64_t branching, std::uint32_t goal_level, const Rational& depth_error) {
  CrossoverReport report;
  report.branching = branching;
  report.goal_level = goal_level;
  report.depth_error = depth_error;
  const CrossoverBound bound = crossover_bound(branching, goal_level, depth_error);
  report.bound = bound.goals;
  report.bound_source = bound.source;
  // At-most comparison: g = b^d* always qualifies, so a value exists.
  report.exact = *empirical_crossover(branching, goal_level, depth_error);
  const Integer level_size = pow_integer(branching, goal_level);
  report.density_bound = Rational(Integer(report.bound), level_size);
  report.density_exact = Rational(Integer(report.exact), level_size);
  switch (bound.source) {
    case BoundSource::goal_level_two:
      report.note = "d*=2, e=1: bound is one above the general linear bound";
      break;
    case BoundSource::goal_level_one:
      report.note = "d*=1: BrFS is strictly cheaper for g < b and the expectations are equal at g = b";
      break;
    case BoundSource::empirical_fallback:
      report.note = "d*=1, e>1: no closed-form bound; reporting the exact crossover";
      break;
    case BoundSource::linear_bound:
      break;
  }
  return report;
}

std::vector<Rational> default_depth_errors() { return {Rational(1), Rational(3, 2), Rational(2)}; }

std::vector<SweepSeries> sweep_expected_tests(std::uint64_t branching, std::uint32_t goal_level,
                                              std::span<const Rational> depth_errors, std::uint64_t first_goals,
                                              std::uint64_t last_goals) {
  if (first_goals < 1 || first_goals > last_goals) throw InvalidInput("goal range must satisfy 1 <= first <= last");
  for (const Rational& e : depth_errors) validate(branching, goal_level, e);

  std::vector<SweepSeries> out;
  SweepSeries brfs{.name = "brfs", .x_label = "goals", .y_label = "expected_goal_tests",
                   .points = {}, .config = {{"branching", std::to_string(branching)}, {"goal_level", std::to_string(goal_level)}}};
  for (std::uint64_t g = first_goals; g <= last_goals; ++g) {
    brfs.points.push_back({g, expected_brfs_tree(branching, goal_level, g).value});
  }
  out.push_back(std::move(brfs));
  for (const Rational& e : depth_errors) {
    SweepSeries rrw{.name = "rrw_" + series_suffix(e), .x_label = "goals", .y_label = "expected_goal_tests",
                    .points = {}, .config = sweep_config(branching, e)};
    rrw.config.emplace_back("goal_level", std::to_string(goal_level));
    for (std::uint64_t g = first_goals; g <= last_goals; ++g) {
      rrw.points.push_back({g, expected_rrw_tree(branching, goal_level, g, e).value});
    }
    out.push_back(std::move(rrw));
  }
  return out;
}

std::vector<SweepSeries> sweep_crossover(std::uint64_t branching, std::uint32_t first_level,
                                         std::uint32_t last_level, std::span<const Rational> depth_errors) {
  if (first_level < 1 || first_level > last_level) throw InvalidInput("goal level range must satisfy 1 <= first <= last");
  std::vector<SweepSeries> out;
  for (const Rational& e : depth_errors) {
    SweepSeries bound{.name = "bound_" + series_suffix(e), .x_label = "goal_level", .y_label = "goals",
                      .points = {}, .config = sweep_config(branching, e)};
    SweepSeries exact{.name = "exact_" + series_suffix(e), .x_label = "goal_level", .y_label = "goals",
                      .points = {}, .config = sweep_config(branching, e)};
    for (std::uint32_t d = first_level; d <= last_level; ++d) {
      if (!is_integer(e * d)) continue;
      const CrossoverReport report = crossover_report(branching, d, e);
      bound.points.push_back({d, Rational(report.bound)});
      exact.points.push_back({d, Rational(report.exact)});
    }
    out.push_back(std::move(bound));
    out.push_back(std::move(exact));
  }
  return out;
}

std::vector<SweepSeries> sweep_density(std::uint64_t branching, std::uint32_t first_level, std::uint32_t last_level,
                                       std::span<const Rational> depth_errors) {
  if (first_level < 1 || first_level > last_level) throw InvalidInput("goal level range must satisfy 1 <= first <= last");
  std::vector<SweepSeries> out;
  for (const Rational& e : depth_errors) {
    SweepSeries density{.name = "density_" + series_suffix(e), .x_label = "goal_level", .y_label = "goal_density",
                        .points = {}, .config = sweep_config(branching, e)};
    for (std::uint32_t d = first_level; d <= last_level; ++d) {
      if (!is_integer(e * d)) continue;
      density.points.push_back({d, density_crossover(branching, d, e)});
    }
    out.push_back(std::move(density));
  }
  return out;
}

}  // namespace plateau
