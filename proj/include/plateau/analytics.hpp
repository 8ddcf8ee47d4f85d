#pragma once

#include <cstdint>
#include <string_view>

#include "plateau/rational.hpp"
#include "plateau/task.hpp"

namespace plateau {

/// Which closed form produced an Expectation.
enum class Formula {
  brfs_general,  // N_O + (N + 1)/(g + 1), goals uniform at the goal level
  rrw_general,   // e d*/s - (e - 1) d* + 1
  brfs_tree,     // brfs_general on a uniform b-ary tree
  rrw_tree,      // rrw_general with s = g / b^d*
};

/// Short tag: "thm1", "thm2", "cor1", "cor2".
std::string_view formula_tag(Formula formula);

/// Exact expected number of goal tests.
struct Expectation {
  Rational value;
  Formula formula;
};

/// Probability that a single walk reaches a goal; always in (0, 1].
class SuccessProbability {
 public:
  explicit SuccessProbability(Rational value);
  const Rational& value() const noexcept { return value_; }

 private:
  Rational value_;
};

Expectation expected_brfs_general(const Integer& shallow_count, const Integer& goal_level_count,
                                  const Integer& goal_count);

Expectation expected_rrw_general(std::uint32_t goal_level, const Rational& depth_error,
                                 const SuccessProbability& success);

Expectation expected_brfs_tree(std::uint64_t branching, std::uint32_t goal_level, std::uint64_t goal_count);

Expectation expected_rrw_tree(std::uint64_t branching, std::uint32_t goal_level, std::uint64_t goal_count,
                              const Rational& depth_error);

/// g / b^d*.
SuccessProbability tree_success_probability(std::uint64_t branching, std::uint32_t goal_level,
                                            std::uint64_t goal_count);

/// Exact probability that a uniform depth-`depth` walk visits a goal, by
/// forward propagation of visit probabilities. Requires a leveled graph
/// (every edge from a reachable vertex goes exactly one level deeper) with
/// all reachable goals at the goal level; throws NotLeveled otherwise and
/// DeadEnd if probability mass reaches a vertex without successors above
/// depth `depth`. The result may be 0 when depth < d*.
Rational dp_success_probability(const GraphTask& task, std::uint64_t depth);

}  // namespace plateau
