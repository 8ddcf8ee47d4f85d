#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plateau/rational.hpp"

namespace plateau {

/// Where a crossover bound comes from.
enum class BoundSource {
  linear_bound,        // (e d* - 1)(b - 1) + 1, for d* >= 2 and e d* > 2
  goal_level_two,      // (e d* - 1)(b - 1) + 2, for d* = 2 and e = 1
  goal_level_one,      // b, where both expectations are equal (d* = 1, e = 1)
  empirical_fallback,  // d* = 1, e > 1: no closed-form bound, exact scan used
};

std::string_view bound_source_name(BoundSource source);

struct CrossoverBound {
  std::uint64_t goals = 0;
  BoundSource source = BoundSource::linear_bound;
};

/// Whether RRW must match-or-beat (E[R] <= E[B]) or strictly beat BrFS.
enum class Comparison { at_most, strictly_less };

/// Smallest goal count for which E[BrFS] >= E[RRW] is guaranteed.
CrossoverBound crossover_bound(std::uint64_t branching, std::uint32_t goal_level, const Rational& depth_error);

/// Smallest g in [1, b^d*] at which the exact tree expectations satisfy the
/// comparison, or nullopt. Linear scan over small ranges, bisection over
/// large ones (E[B] - E[R] is increasing in g).
std::optional<std::uint64_t> empirical_crossover(std::uint64_t branching, std::uint32_t goal_level,
                                                 const Rational& depth_error,
                                                 Comparison comparison = Comparison::at_most);

/// crossover_bound / b^d*.
Rational density_crossover(std::uint64_t branching, std::uint32_t goal_level, const Rational& depth_error);

struct CrossoverReport {
  std::uint64_t branching = 0;
  std::uint32_t goal_level = 0;
  Rational depth_error;
  std::uint64_t bound = 0;
  BoundSource bound_source = BoundSource::linear_bound;
  std::uint64_t exact = 0;
  Rational density_bound;
  Rational density_exact;
  std::string note;
};

CrossoverReport crossover_report(std::uint64_t branching, std::uint32_t goal_level, const Rational& depth_error);

struct SweepPoint {
  std::uint64_t x = 0;
  Rational y;
};

struct SweepSeries {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<SweepPoint> points;
  std::vector<std::pair<std::string, std::string>> config;
};

/// {1, 3/2, 2}.
std::vector<Rational> default_depth_errors();

/// One BrFS series over g, then one RRW series per depth error. Every depth
/// error must give an integral e * d*.
std::vector<SweepSeries> sweep_expected_tests(std::uint64_t branching, std::uint32_t goal_level,
                                              std::span<const Rational> depth_errors, std::uint64_t first_goals,
                                              std::uint64_t last_goals);

/// Per depth error: a bound series and an exact-crossover series over d*.
/// Goal levels where e * d* is not an integer are skipped.
std::vector<SweepSeries> sweep_crossover(std::uint64_t branching, std::uint32_t first_level,
                                         std::uint32_t last_level, std::span<const Rational> depth_errors);

/// Per depth error: density_crossover over d*, skipping non-integral e * d*.
std::vector<SweepSeries> sweep_density(std::uint64_t branching, std::uint32_t first_level, std::uint32_t last_level,
                                       std::span<const Rational> depth_errors);

}  // namespace plateau
