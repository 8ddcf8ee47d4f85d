#include "plateau/brfs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "plateau/errors.hpp"
#include "plateau/rng.hpp"

namespace plateau {
namespace {

[[noreturn]] void frontier_exceeded(std::uint64_t size, std::uint64_t cap) {
  throw MemoryBudgetExceeded("open list of " + std::to_string(size) + " vertices exceeds the cap of " +
                             std::to_string(cap));
}

}  // namespace

RunStats run_brfs(const TreeTask& task, const BrfsOptions& options, const TestObserver& observer) {
  RunStats stats;
  const std::uint64_t b = task.branching();
  const bool shuffled = options.tie.mode == TieMode::uniform_random;
  SplitMix64 rng(options.tie.seed);
  std::vector<std::uint64_t> order;

  // Tree levels cannot contain duplicates, so the open list of a level is
  // the index range [0, open_count): children of the i-th expanded vertex
  // occupy [i*b, i*b + b) of the next level. Only the random tie-breaking
  // mode materializes the level, as a permutation.
  unsigned __int128 open_count = 1;
  for (std::uint32_t level = 0; level <= task.goal_level(); ++level) {
    const auto count = static_cast<std::uint64_t>(open_count);
    if (shuffled) {
      if (count > options.frontier_cap) frontier_exceeded(count, options.frontier_cap);
      order.resize(count);
      std::iota(order.begin(), order.end(), std::uint64_t{0});
      shuffle(std::span<std::uint64_t>(order), rng);
    }
    unsigned __int128 next_count = 0;
    for (std::uint64_t pos = 0; pos < count; ++pos) {
      const std::uint64_t index = shuffled ? order[pos] : pos;
      ++stats.goal_tests;
      stats.max_tested_level = level;
      if (observer) observer(level, index);
      if (task.is_goal(level, index)) {
        stats.found = true;
        stats.path = tree_path(b, level, index);
        return stats;
      }
      ++stats.successor_generations;
      next_count += b;
    }
    open_count = next_count;
  }
  return stats;
}

RunStats run_brfs(const GraphTask& task, const BrfsOptions& options, const TestObserver& observer) {
  RunStats stats;
  const bool shuffled = options.tie.mode == TieMode::uniform_random;
  SplitMix64 rng(options.tie.seed);

  constexpr Vertex kNoParent = ~Vertex{0};
  std::vector<Vertex> parent(task.vertex_count(), kNoParent);
  std::vector<char> seen(task.vertex_count(), 0);
  std::vector<Vertex> open{task.initial()};
  std::vector<Vertex> next;
  seen[task.initial()] = 1;

  for (std::uint32_t level = 0; !open.empty(); ++level) {
    if (shuffled) shuffle(std::span<Vertex>(open), rng);
    next.clear();
    for (std::size_t pos = 0; pos < open.size(); ++pos) {
      const Vertex v = open[pos];
      ++stats.goal_tests;
      stats.max_tested_level = level;
      if (observer) observer(level, v);
      if (task.is_goal(v)) {
        stats.found = true;
        for (Vertex u = v; u != kNoParent; u = parent[u]) stats.path.push_back(u);
        std::reverse(stats.path.begin(), stats.path.end());
        return stats;
      }
      ++stats.successor_generations;
      for (Vertex w : task.successors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        next.push_back(w);
      }
      const std::uint64_t held = open.size() - pos - 1 + next.size();
      if (held > options.frontier_cap) frontier_exceeded(held, options.frontier_cap);
    }
    open.swap(next);
  }
  return stats;
}

}  // namespace plateau
