#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace plateau {

using Vertex = std::size_t;

/// Parameters of a uniform-branching directed tree whose goals all sit at
/// one level. Vertices at level l are identified by their l base-b path
/// digits, i.e. an index in [0, b^l).
struct TreeTaskSpec {
  std::uint64_t branching = 2;
  std::uint32_t goal_level = 1;
  std::uint64_t goal_count = 1;
  std::uint64_t placement_seed = 0;
};

/// b^exponent, throwing OverflowError if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent);

/// Implicit tree task: the tree is never materialized, only the sorted goal
/// indices at the goal level are stored. Immutable after construction.
class TreeTask {
 public:
  /// Uses an explicit goal placement. Indices must be distinct and in
  /// [0, b^d*); their count must equal spec.goal_count.
  static TreeTask with_goals(const TreeTaskSpec& spec, std::vector<std::uint64_t> goal_indices);

  const TreeTaskSpec& spec() const noexcept { return spec_; }
  std::uint64_t branching() const noexcept { return spec_.branching; }
  std::uint32_t goal_level() const noexcept { return spec_.goal_level; }
  std::uint64_t goal_level_size() const noexcept { return goal_level_size_; }
  std::span<const std::uint64_t> goal_indices() const noexcept { return goals_; }

  bool is_goal(std::uint32_t level, std::uint64_t index) const noexcept;

 private:
  TreeTask(const TreeTaskSpec& spec, std::uint64_t level_size, std::vector<std::uint64_t> goals)
      : spec_(spec), goal_level_size_(level_size), goals_(std::move(goals)) {}

  TreeTaskSpec spec_;
  std::uint64_t goal_level_size_;
  std::vector<std::uint64_t> goals_;
};

/// Samples spec.goal_count distinct goal-level indices uniformly without
/// replacement, deterministically from spec.placement_seed.
TreeTask make_tree_task(const TreeTaskSpec& spec);

/// Path from the root to (level, index) as within-level indices; entry l is
/// the ancestor at level l.
std::vector<std::uint64_t> tree_path(std::uint64_t branching, std::uint32_t level, std::uint64_t index);

/// Explicit search task over dense vertex indices.
class GraphTask {
 public:
  GraphTask(std::vector<std::vector<Vertex>> adjacency, Vertex initial, std::vector<Vertex> goals);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adjacency_; }
  std::span<const Vertex> successors(Vertex v) const noexcept { return adjacency_[v]; }
  Vertex initial() const noexcept { return initial_; }
  std::span<const Vertex> goals() const noexcept { return goals_; }
  bool is_goal(Vertex v) const noexcept { return goal_mask_[v] != 0; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  Vertex initial_;
  std::vector<Vertex> goals_;  // sorted, unique
  std::vector<char> goal_mask_;
};

/// Plateau-escape task: goals are the vertices whose heuristic value is
/// strictly below the initial vertex's. Throws NoExit if there are none.
GraphTask make_escape_task(std::vector<std::vector<Vertex>> adjacency, Vertex initial,
                           std::span<const double> heuristic);

struct LevelCounts {
  std::uint32_t goal_level = 0;           // d*
  std::uint64_t shallow_count = 0;        // vertices with level < d*
  std::uint64_t goal_level_count = 0;     // vertices with level == d*
  std::uint64_t goal_count_at_level = 0;
  std::uint64_t deeper_goal_count = 0;    // reachable goals with level > d*
};

LevelCounts level_counts(const TreeTask& task);

/// Levels by unweighted shortest distance from the initial vertex. Throws
/// Unreachable if no goal can be reached.
LevelCounts level_counts(const GraphTask& task);

/// Shortest-path level of every vertex; -1 where unreachable.
std::vector<std::int64_t> vertex_levels(const GraphTask& task);

/// Reads the text graph format:
///   V E
///   u v          (E directed edges)
///   initial
///   g0 g1 ...    or    h: h0 h1 ... h(V-1)
GraphTask read_graph(std::istream& in);

}  // namespace plateau
