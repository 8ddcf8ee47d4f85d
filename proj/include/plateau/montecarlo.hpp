#pragma once

#include <cstdint>
#include <optional>

#include "plateau/analytics.hpp"
#include "plateau/brfs.hpp"
#include "plateau/rational.hpp"

namespace plateau {

/// A tree task description without a placement seed; each trial draws its own.
struct TreeShape {
  std::uint64_t branching = 2;
  std::uint32_t goal_level = 1;
  std::uint64_t goal_count = 1;
};

struct SimulationOptions {
  std::uint64_t trials = 10'000;
  std::uint64_t base_seed = 0;
  double confidence = 0.95;  // of the normal-approximation interval
  unsigned threads = 1;      // 0: std::thread::hardware_concurrency()
  std::optional<std::uint64_t> max_walks = 10'000'000;
};

struct EstimateSummary {
  std::uint64_t trials = 0;  // successful trials entering the statistics
  Rational mean_exact;
  double mean = 0;
  double variance = 0;  // unbiased sample variance
  double std_error = 0;
  double ci_low = 0;
  double ci_high = 0;
  double confidence = 0;
  std::uint64_t base_seed = 0;
  std::uint64_t budget_exceeded = 0;        // RRW trials that hit max_walks
  std::uint64_t accounting_violations = 0;  // goal_tests != successor_generations + 1
  std::uint64_t depth_violations = 0;       // BrFS tested a vertex deeper than d*
};

struct ValidationReport {
  Expectation analytic;
  EstimateSummary estimate;
  double z_score = 0;
  double z_threshold = 4;
  bool pass = false;
};

/// Trial i draws its goal placement from derive_seed(derive_seed(base_seed, i), 0)
/// and, in random tie mode, its tie-breaking stream from
/// derive_seed(derive_seed(base_seed, i), 1).
EstimateSummary estimate_brfs(const TreeShape& shape, TieMode tie, const SimulationOptions& options);

/// Trial i draws its placement as above and its walk stream from
/// derive_seed(derive_seed(base_seed, i), 1).
EstimateSummary estimate_rrw(const TreeShape& shape, const Rational& depth_error, const SimulationOptions& options);

/// z = (mean - analytic) / std_error. With zero standard error, z is 0 on an
/// exact match and infinite otherwise.
ValidationReport validate_against(const Expectation& analytic, const EstimateSummary& estimate,
                                  double z_threshold = 4);

/// Compares a BrFS (no depth error) or RRW estimate with its tree closed form.
ValidationReport validate(const TreeShape& shape, const std::optional<Rational>& depth_error,
                          const SimulationOptions& options, double z_threshold = 4, TieMode tie = TieMode::lexicographic);

}  // namespace plateau
