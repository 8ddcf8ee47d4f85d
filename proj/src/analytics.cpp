#include "plateau/analytics.hpp"

#include <string>
#include <vector>

#include "plateau/errors.hpp"
#include "plateau/rrw.hpp"

namespace plateau {
namespace {

void validate_tree(std::uint64_t branching, std::uint32_t goal_level, std::uint64_t goal_count) {
  if (branching < 2) throw InvalidInput("branching factor must be at least 2");
  if (goal_level < 1) throw InvalidInput("goal level must be at least 1");
  if (goal_count < 1) throw InvalidInput("goal count must be at least 1");
  if (Integer(goal_count) > pow_integer(branching, goal_level)) {
    throw InvalidInput("goal count " + std::to_string(goal_count) + " exceeds b^d* = " +
                       pow_integer(branching, goal_level).str());
  }
}

}  // namespace

std::string_view formula_tag(Formula formula) {
  switch (formula) {
    case Formula::brfs_general: return "thm1";
    case Formula::rrw_general: return "thm2";
    case Formula::brfs_tree: return "cor1";
    case Formula::rrw_tree: return "cor2";
  }
  return "?";
}

SuccessProbability::SuccessProbability(Rational value) : value_(std::move(value)) {
  if (value_ <= 0 || value_ > 1) {
    throw InvalidInput("success probability must lie in (0, 1], got " + to_fraction_string(value_));
  }
}

Expectation expected_brfs_general(const Integer& shallow_count, const Integer& goal_level_count,
                                  const Integer& goal_count) {
  if (goal_count < 1) throw InvalidInput("goal count must be at least 1");
  if (shallow_count < 0) throw InvalidInput("shallow vertex count must be non-negative");
  if (goal_level_count < goal_count) throw InvalidInput("goal level holds fewer vertices than goals");
  return {Rational(shallow_count) + Rational(goal_level_count + 1, goal_count + 1), Formula::brfs_general};
}

Expectation expected_rrw_general(std::uint32_t goal_level, const Rational& depth_error,
                                 const SuccessProbability& success) {
  const Rational depth(walk_depth(goal_level, depth_error));
  return {depth / success.value() - (depth_error - 1) * goal_level + 1, Formula::rrw_general};
}

Expectation expected_brfs_tree(std::uint64_t branching, std::uint32_t goal_level, std::uint64_t goal_count) {
  validate_tree(branching, goal_level, goal_count);
  const Integer level_size = pow_integer(branching, goal_level);
  const Integer shallow = (level_size - 1) / (branching - 1);
  auto out = expected_brfs_general(shallow, level_size, goal_count);
  out.formula = Formula::brfs_tree;
  return out;
}

Expectation expected_rrw_tree(std::uint64_t branching, std::uint32_t goal_level, std::uint64_t goal_count,
                              const Rational& depth_error) {
  validate_tree(branching, goal_level, goal_count);
  auto out = expected_rrw_general(goal_level, depth_error,
                                  tree_success_probability(branching, goal_level, goal_count));
  out.formula = Formula::rrw_tree;
  return out;
}

SuccessProbability tree_success_probability(std::uint64_t branching, std::uint32_t goal_level,
                                            std::uint64_t goal_count) {
  validate_tree(branching, goal_level, goal_count);
  return SuccessProbability(Rational(Integer(goal_count), pow_integer(branching, goal_level)));
}

Rational dp_success_probability(const GraphTask& task, std::uint64_t depth) {
  const auto level = vertex_levels(task);
  const LevelCounts counts = level_counts(task);
  if (counts.deeper_goal_count != 0) {
    throw NotLeveled(std::to_string(counts.deeper_goal_count) + " reachable goal(s) lie below the goal level");
  }
  for (Vertex u = 0; u < task.vertex_count(); ++u) {
    if (level[u] < 0) continue;
    for (Vertex v : task.successors(u)) {
      if (level[v] != level[u] + 1) {
        throw NotLeveled("edge " + std::to_string(u) + "->" + std::to_string(v) + " joins levels " +
                         std::to_string(level[u]) + " and " + std::to_string(level[v]));
      }
    }
  }
  if (task.is_goal(task.initial())) return Rational(1);

  // In a leveled graph a walk stands on a level-d vertex after d steps, so
  // the mass at step d is a distribution over level d.
  std::vector<Rational> mass(task.vertex_count());
  std::vector<Vertex> frontier{task.initial()};
  mass[task.initial()] = 1;
  Rational success = 0;
  for (std::uint64_t d = 1; d <= depth && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      const auto successors = task.successors(u);
      if (successors.empty()) {
        throw DeadEnd("vertex " + std::to_string(u) + " has no successors above depth " + std::to_string(depth));
      }
      const Rational share = mass[u] / successors.size();
      for (Vertex v : successors) {
        if (mass[v] == 0) next.push_back(v);
        mass[v] += share;
      }
      mass[u] = 0;
    }
    frontier.clear();
    for (Vertex v : next) {
      if (task.is_goal(v)) {
        success += mass[v];
        mass[v] = 0;
      } else {
        frontier.push_back(v);
      }
    }
  }
  return success;
}

}  // namespace plateau
