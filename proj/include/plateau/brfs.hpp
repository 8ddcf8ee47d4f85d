#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "plateau/task.hpp"

namespace plateau {

/// Operation counts of one search run. On tree tasks `path` holds the
/// within-level index of each vertex (entry l is the level-l vertex); on
/// graph tasks it holds vertex indices.
struct RunStats {
  std::uint64_t goal_tests = 0;
  std::uint64_t successor_generations = 0;
  bool found = false;
  std::vector<std::uint64_t> path;
  std::uint64_t walks = 0;  // always 0 for BrFS
  std::uint32_t max_tested_level = 0;
};

enum class TieMode { lexicographic, uniform_random };

struct TieBreaking {
  TieMode mode = TieMode::lexicographic;
  std::uint64_t seed = 0;
};

struct BrfsOptions {
  TieBreaking tie{};
  // Largest number of vertices held in materialized open lists.
  std::uint64_t frontier_cap = std::uint64_t{1} << 26;
};

/// Called once per goal test with the tested vertex's level and identity
/// (within-level index on trees, vertex index on graphs).
using TestObserver = std::function<void(std::uint32_t level, std::uint64_t vertex)>;

/// Breadth-first search on an implicit tree. Every vertex is goal-tested when
/// it is selected and, if the test fails, its successors are generated.
/// Vertices of one level are tested in index order, or in a uniformly
/// random order in TieMode::uniform_random.
RunStats run_brfs(const TreeTask& task, const BrfsOptions& options = {}, const TestObserver& observer = {});

/// Breadth-first search with duplicate detection; vertices are marked seen
/// when generated. If the open list empties, returns found == false.
RunStats run_brfs(const GraphTask& task, const BrfsOptions& options = {}, const TestObserver& observer = {});

}  // namespace plateau
