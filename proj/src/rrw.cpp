#include "plateau/rrw.hpp"

#include <string>

#include "plateau/errors.hpp"
#include "plateau/rng.hpp"

namespace plateau {
namespace {

void check_budget(const RrwConfig& config) {
  if (config.max_walks && *config.max_walks == 0) throw InvalidInput("max_walks must be positive");
}

bool walk_budget_left(const RrwConfig& config, std::uint64_t walks) {
  return !config.max_walks || walks < *config.max_walks;
}

// One depth-limited walk on a tree. Returns the level at which a goal was
// hit, or 0 if none was. Indices are only tracked down to the goal level,
// since deeper levels hold no goals.
template <typename OnStep>
std::uint32_t tree_walk(const TreeTask& task, std::uint64_t depth, SplitMix64& rng, std::uint64_t& index,
                        OnStep&& on_step) {
  const std::uint64_t b = task.branching();
  const std::uint32_t goal_level = task.goal_level();
  index = 0;
  for (std::uint64_t d = 1; d <= depth; ++d) {
    const std::uint64_t child = rng.uniform(b);
    if (d <= goal_level) index = index * b + child;
    on_step();
    if (d == goal_level && task.is_goal(goal_level, index)) return goal_level;
  }
  return 0;
}

[[noreturn]] void dead_end(Vertex v, std::uint64_t step, std::uint64_t depth) {
  throw DeadEnd("vertex " + std::to_string(v) + " has no successors at walk step " + std::to_string(step) +
                " of " + std::to_string(depth));
}

}  // namespace

std::uint64_t walk_depth(std::uint32_t goal_level, const Rational& depth_error) {
  if (depth_error < 1) throw InvalidInput("depth error must be at least 1, got " + to_fraction_string(depth_error));
  const Rational t = depth_error * goal_level;
  if (!is_integer(t)) {
    throw InvalidInput("e*d* = " + to_fraction_string(t) + " (" + to_decimal_string(t, 6) +
                       ") is not an integer");
  }
  if (t < 1) throw InvalidInput("walk depth e*d* must be at least 1");
  return numerator(t).convert_to<std::uint64_t>();
}

RunStats run_rrw(const TreeTask& task, const RrwConfig& config) {
  check_budget(config);
  const std::uint64_t depth = walk_depth(task.goal_level(), config.depth_error);
  RunStats stats;
  stats.goal_tests = 1;
  if (task.is_goal(0, 0)) {
    stats.found = true;
    stats.path = {0};
    return stats;
  }
  SplitMix64 rng(config.walk_seed);
  std::uint64_t index = 0;
  auto step = [&] {
    ++stats.successor_generations;
    ++stats.goal_tests;
  };
  while (walk_budget_left(config, stats.walks)) {
    ++stats.walks;
    if (const std::uint32_t hit = tree_walk(task, depth, rng, index, step); hit != 0) {
      stats.found = true;
      stats.max_tested_level = hit;
      stats.path = tree_path(task.branching(), hit, index);
      return stats;
    }
    stats.max_tested_level = static_cast<std::uint32_t>(depth);
  }
  return stats;
}

RunStats run_rrw(const GraphTask& task, const RrwConfig& config) {
  check_budget(config);
  RunStats stats;
  stats.goal_tests = 1;
  if (task.is_goal(task.initial())) {
    stats.found = true;
    stats.path = {task.initial()};
    return stats;
  }
  const std::uint64_t depth = walk_depth(level_counts(task).goal_level, config.depth_error);
  SplitMix64 rng(config.walk_seed);
  std::vector<std::uint64_t> path;
  path.reserve(depth + 1);
  while (walk_budget_left(config, stats.walks)) {
    ++stats.walks;
    Vertex v = task.initial();
    path.assign(1, v);
    for (std::uint64_t d = 1; d <= depth; ++d) {
      const auto successors = task.successors(v);
      if (successors.empty()) dead_end(v, d, depth);
      v = successors[rng.uniform(successors.size())];
      path.push_back(v);
      ++stats.successor_generations;
      ++stats.goal_tests;
      stats.max_tested_level = std::max<std::uint32_t>(stats.max_tested_level, static_cast<std::uint32_t>(d));
      if (task.is_goal(v)) {
        stats.found = true;
        stats.path = path;
        return stats;
      }
    }
  }
  return stats;
}

Rational empirical_success_probability(const TreeTask& task, std::uint64_t depth, std::uint64_t trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  SplitMix64 rng(seed);
  std::uint64_t hits = 0;
  std::uint64_t index = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (tree_walk(task, depth, rng, index, [] {}) != 0) ++hits;
  }
  return Rational(hits, trials);
}

Rational empirical_success_probability(const GraphTask& task, std::uint64_t depth, std::uint64_t trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  SplitMix64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Vertex v = task.initial();
    for (std::uint64_t d = 1; d <= depth; ++d) {
      const auto successors = task.successors(v);
      if (successors.empty()) dead_end(v, d, depth);
      v = successors[rng.uniform(successors.size())];
      if (task.is_goal(v)) {
        ++hits;
        break;
      }
    }
  }
  return Rational(hits, trials);
}

}  // namespace plateau
