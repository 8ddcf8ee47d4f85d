#pragma once

#include <cstdint>
#include <optional>

#include "plateau/brfs.hpp"
#include "plateau/rational.hpp"
#include "plateau/task.hpp"

namespace plateau {

inline constexpr std::uint64_t kDefaultMaxWalks = 10'000'000;

struct RrwConfig {
  Rational depth_error{1};  // e; walks restart at depth t = e * d*
  std::uint64_t walk_seed = 0;
  std::optional<std::uint64_t> max_walks = kDefaultMaxWalks;  // nullopt: unbounded
};

/// t = e * d*. Throws InvalidInput unless e >= 1 and e * d* is a positive integer.
std::uint64_t walk_depth(std::uint32_t goal_level, const Rational& depth_error);

/// Constant-depth restarting random walks. The initial vertex is tested
/// once; each step then samples one successor uniformly and tests it. A walk
/// restarts from the initial vertex after t steps. If max_walks walks all
/// fail, returns found == false with the counts so far.
RunStats run_rrw(const TreeTask& task, const RrwConfig& config);

/// As above with t derived from the graph's goal level. Throws DeadEnd when
/// a walk reaches a vertex without successors before depth t, Unreachable
/// when no goal is reachable.
RunStats run_rrw(const GraphTask& task, const RrwConfig& config);

/// Fraction of `trials` independent depth-`depth` walks that hit a goal.
Rational empirical_success_probability(const TreeTask& task, std::uint64_t depth, std::uint64_t trials,
                                       std::uint64_t seed);
Rational empirical_success_probability(const GraphTask& task, std::uint64_t depth, std::uint64_t trials,
                                       std::uint64_t seed);

}  // namespace plateau
