#include "plateau/task.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>

#include "plateau/errors.hpp"
#include "plateau/rng.hpp"

namespace plateau {
namespace {

void validate_spec(const TreeTaskSpec& spec) {
  if (spec.branching < 2) throw InvalidSpec("branching factor must be at least 2");
  if (spec.goal_level < 1) throw InvalidSpec("goal level must be at least 1");
  if (spec.goal_count < 1) throw InvalidSpec("goal count must be at least 1");
}

// Partial Fisher-Yates over the virtual array [0, n): the first `count`
// positions after `count` swaps. The dense and sparse variants consume the
// same draws and produce the same sample.
std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n, std::uint64_t count,
                                                      SplitMix64& rng) {
  std::vector<std::uint64_t> out(count);
  if (n <= 32 * count) {
    std::vector<std::uint64_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t j = i + rng.uniform(n - i);
      std::swap(pool[i], pool[j]);
      out[i] = pool[i];
    }
    return out;
  }
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  moved.reserve(2 * count);
  auto at = [&](std::uint64_t k) {
    auto it = moved.find(k);
    return it == moved.end() ? k : it->second;
  };
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + rng.uniform(n - i);
    const std::uint64_t vi = at(i);
    const std::uint64_t vj = at(j);
    moved[j] = vi;
    out[i] = vj;
  }
  return out;
}

}  // namespace

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      throw OverflowError(std::to_string(base) + "^" + std::to_string(exponent) +
                          " exceeds the 64-bit range");
    }
    out *= base;
  }
  return out;
}

TreeTask TreeTask::with_goals(const TreeTaskSpec& spec, std::vector<std::uint64_t> goal_indices) {
  validate_spec(spec);
  const std::uint64_t level_size = checked_pow(spec.branching, spec.goal_level);
  if (spec.goal_count > level_size) {
    throw InvalidSpec("goal count " + std::to_string(spec.goal_count) + " exceeds the " +
                      std::to_string(level_size) + " vertices at the goal level");
  }
  if (goal_indices.size() != spec.goal_count) {
    throw InvalidSpec("expected " + std::to_string(spec.goal_count) + " goal indices, got " +
                      std::to_string(goal_indices.size()));
  }
  std::sort(goal_indices.begin(), goal_indices.end());
  if (std::adjacent_find(goal_indices.begin(), goal_indices.end()) != goal_indices.end()) {
    throw InvalidSpec("goal indices must be distinct");
  }
  if (!goal_indices.empty() && goal_indices.back() >= level_size) {
    throw InvalidSpec("goal index " + std::to_string(goal_indices.back()) + " out of range");
  }
  return TreeTask(spec, level_size, std::move(goal_indices));
}

bool TreeTask::is_goal(std::uint32_t level, std::uint64_t index) const noexcept {
  return level == spec_.goal_level && std::binary_search(goals_.begin(), goals_.end(), index);
}

TreeTask make_tree_task(const TreeTaskSpec& spec) {
  validate_spec(spec);
  const std::uint64_t level_size = checked_pow(spec.branching, spec.goal_level);
  if (spec.goal_count > level_size) {
    throw InvalidSpec("goal count " + std::to_string(spec.goal_count) + " exceeds the " +
                      std::to_string(level_size) + " vertices at the goal level");
  }
  SplitMix64 rng(spec.placement_seed);
  return TreeTask::with_goals(spec, sample_without_replacement(level_size, spec.goal_count, rng));
}

std::vector<std::uint64_t> tree_path(std::uint64_t branching, std::uint32_t level, std::uint64_t index) {
  std::vector<std::uint64_t> path(level + 1);
  for (std::uint32_t l = level + 1; l-- > 0;) {
    path[l] = index;
    index /= branching;
  }
  return path;
}

GraphTask::GraphTask(std::vector<std::vector<Vertex>> adjacency, Vertex initial, std::vector<Vertex> goals)
    : adjacency_(std::move(adjacency)), initial_(initial), goals_(std::move(goals)) {
  const std::size_t n = adjacency_.size();
  if (n == 0) throw InvalidInput("graph has no vertices");
  if (initial_ >= n) throw InvalidInput("initial vertex " + std::to_string(initial_) + " out of range");
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (v >= n) {
        throw InvalidInput("edge " + std::to_string(u) + "->" + std::to_string(v) + " leaves the vertex range");
      }
    }
  }
  std::sort(goals_.begin(), goals_.end());
  goals_.erase(std::unique(goals_.begin(), goals_.end()), goals_.end());
  goal_mask_.assign(n, 0);
  for (Vertex g : goals_) {
    if (g >= n) throw InvalidInput("goal vertex " + std::to_string(g) + " out of range");
    goal_mask_[g] = 1;
  }
}

GraphTask make_escape_task(std::vector<std::vector<Vertex>> adjacency, Vertex initial,
                           std::span<const double> heuristic) {
  if (heuristic.size() != adjacency.size()) {
    throw InvalidInput("heuristic has " + std::to_string(heuristic.size()) + " values for " +
                       std::to_string(adjacency.size()) + " vertices");
  }
  if (initial >= adjacency.size()) throw InvalidInput("initial vertex out of range");
  std::vector<Vertex> goals;
  for (Vertex v = 0; v < heuristic.size(); ++v) {
    if (heuristic[v] < 0) throw InvalidInput("heuristic values must be non-negative");
    if (heuristic[v] < heuristic[initial]) goals.push_back(v);
  }
  if (goals.empty()) throw NoExit("no vertex improves on the initial heuristic value");
  return GraphTask(std::move(adjacency), initial, std::move(goals));
}

LevelCounts level_counts(const TreeTask& task) {
  const std::uint64_t b = task.branching();
  const std::uint64_t at_level = task.goal_level_size();
  return LevelCounts{
      .goal_level = task.goal_level(),
      .shallow_count = (at_level - 1) / (b - 1),
      .goal_level_count = at_level,
      .goal_count_at_level = task.goal_indices().size(),
      .deeper_goal_count = 0,
  };
}

std::vector<std::int64_t> vertex_levels(const GraphTask& task) {
  std::vector<std::int64_t> level(task.vertex_count(), -1);
  std::deque<Vertex> queue{task.initial()};
  level[task.initial()] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : task.successors(u)) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level;
}

LevelCounts level_counts(const GraphTask& task) {
  const auto level = vertex_levels(task);
  std::int64_t goal_level = -1;
  for (Vertex g : task.goals()) {
    if (level[g] >= 0 && (goal_level < 0 || level[g] < goal_level)) goal_level = level[g];
  }
  if (goal_level < 0) throw Unreachable("no goal is reachable from the initial vertex");

  LevelCounts out;
  out.goal_level = static_cast<std::uint32_t>(goal_level);
  for (std::int64_t l : level) {
    if (l < 0) continue;
    if (l < goal_level) ++out.shallow_count;
    if (l == goal_level) ++out.goal_level_count;
  }
  for (Vertex g : task.goals()) {
    if (level[g] == goal_level) ++out.goal_count_at_level;
    if (level[g] > goal_level) ++out.deeper_goal_count;
  }
  return out;
}

GraphTask read_graph(std::istream& in) {
  auto next_line = [&](const char* what) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    throw ParseError(std::string("unexpected end of input while reading ") + what);
  };
  auto fail = [](const std::string& msg) -> ParseError { return ParseError("graph file: " + msg); };

  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  {
    std::istringstream header(next_line("header"));
    if (!(header >> vertex_count >> edge_count) || vertex_count == 0) throw fail("bad header, expected 'V E'");
  }
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (std::size_t i = 0; i < edge_count; ++i) {
    std::istringstream edge(next_line("edges"));
    std::size_t u = 0;
    std::size_t v = 0;
    if (!(edge >> u >> v)) throw fail("bad edge line " + std::to_string(i + 1));
    if (u >= vertex_count || v >= vertex_count) throw fail("edge " + std::to_string(i + 1) + " out of range");
    adjacency[u].push_back(v);
  }
  Vertex initial = 0;
  {
    std::istringstream line(next_line("initial vertex"));
    if (!(line >> initial) || initial >= vertex_count) throw fail("bad initial vertex");
  }
  const std::string goal_line = next_line("goals");
  const auto first = goal_line.find_first_not_of(" \t");
  if (goal_line.compare(first, 2, "h:") == 0) {
    std::istringstream values(goal_line.substr(first + 2));
    std::vector<double> heuristic;
    double h = 0;
    while (values >> h) heuristic.push_back(h);
    if (!values.eof()) throw fail("bad heuristic value");
    if (heuristic.size() != vertex_count) throw fail("expected " + std::to_string(vertex_count) + " heuristic values");
    return make_escape_task(std::move(adjacency), initial, heuristic);
  }
  std::istringstream values(goal_line);
  std::vector<Vertex> goals;
  Vertex g = 0;
  while (values >> g) {
    if (g >= vertex_count) throw fail("goal vertex out of range");
    goals.push_back(g);
  }
  if (!values.eof()) throw fail("bad goal list");
  return GraphTask(std::move(adjacency), initial, std::move(goals));
}

}  // namespace plateau
