#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "plateau/errors.hpp"
#include "plateau/rng.hpp"
#include "plateau/rrw.hpp"

using namespace plateau;

namespace {

const GraphTask& chain3() {
  static const GraphTask chain({{1}, {2}, {}}, 0, {2});
  return chain;
}

}  // namespace

TEST_CASE("walk_depth validates e * d*") {
  CHECK(walk_depth(6, Rational(1)) == 6);
  CHECK(walk_depth(6, Rational(3, 2)) == 9);
  CHECK(walk_depth(2, parse_rational("1.5")) == 3);
  CHECK_THROWS_AS(walk_depth(6, Rational(5, 4)), InvalidInput);
  CHECK_THROWS_AS(walk_depth(6, Rational(1, 2)), InvalidInput);
  CHECK_THROWS_AS(walk_depth(0, Rational(1)), InvalidInput);
}

TEST_CASE("RRW on a saturated two-leaf tree always needs two tests") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RunStats r = run_rrw(make_tree_task({2, 1, 2, seed}), {.depth_error = 1, .walk_seed = seed});
    CHECK(r.goal_tests == 2);
    CHECK(r.walks == 1);
    CHECK(r.found);
  }
}

TEST_CASE("RRW on the two-leaf tree with one goal averages 3 tests") {
  constexpr int kRuns = 100'000;
  const TreeTask task = TreeTask::with_goals({2, 1, 1, 0}, {1});
  double sum = 0;
  double sum_sq = 0;
  for (int i = 0; i < kRuns; ++i) {
    const RunStats r = run_rrw(task, {.depth_error = 1, .walk_seed = derive_seed(3, i)});
    CHECK(r.goal_tests == 1 + r.walks);
    sum += static_cast<double>(r.goal_tests);
    sum_sq += static_cast<double>(r.goal_tests) * static_cast<double>(r.goal_tests);
  }
  const double mean = sum / kRuns;
  const double var = (sum_sq - sum * sum / kRuns) / (kRuns - 1);
  CHECK(std::abs(mean - 3) <= 4 * std::sqrt(var / kRuns));
}

TEST_CASE("RRW on a chain is deterministic") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RunStats r = run_rrw(chain3(), {.depth_error = 1, .walk_seed = seed});
    CHECK(r.goal_tests == 3);
    CHECK(r.successor_generations == 2);
    CHECK(r.path == std::vector<std::uint64_t>{0, 1, 2});
  }
}

TEST_CASE("RRW walk lengths on trees") {
  // Failed walks perform t tests each, the successful one d*.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Rational e = seed % 2 ? Rational(2) : Rational(3, 2);
    const TreeTask task = make_tree_task({3, 4, 1 + seed % 7, seed});
    const RunStats r = run_rrw(task, {.depth_error = e, .walk_seed = seed});
    const std::uint64_t t = walk_depth(4, e);
    REQUIRE(r.found);
    CHECK(r.goal_tests == 1 + t * (r.walks - 1) + 4);
    CHECK(r.goal_tests == r.successor_generations + 1);
    CHECK(r.path.size() == 5);
    CHECK(task.is_goal(4, r.path.back()));
  }
}

TEST_CASE("walk counts on trees are geometric with parameter g/b^d*") {
  // b=2, d*=2, g=1: s = 1/4.
  constexpr int kRuns = 40'000;
  constexpr std::size_t kBins = 12;  // walks 1..11, then 12 or more
  std::vector<std::uint64_t> observed(kBins, 0);
  for (int i = 0; i < kRuns; ++i) {
    const RunStats r = run_rrw(make_tree_task({2, 2, 1, derive_seed(11, i)}), {.depth_error = 1, .walk_seed = derive_seed(12, i)});
    observed[std::min<std::uint64_t>(r.walks, kBins) - 1]++;
  }
  std::vector<double> expected(kBins);
  double tail = 1;
  for (std::size_t k = 0; k + 1 < kBins; ++k) {
    expected[k] = kRuns * tail * 0.25;
    tail *= 0.75;
  }
  expected.back() = kRuns * tail;
  CHECK(testing::chi_square_statistic(observed, expected) < testing::chi_square_critical(kBins - 1, 0.001));
}

TEST_CASE("successor sampling is uniform") {
  // Star with five leaves; goal = one leaf. The success frequency of a
  // single step is the selection frequency of that leaf.
  constexpr std::uint64_t kTrials = 100'000;
  for (Vertex leaf = 1; leaf <= 5; ++leaf) {
    const GraphTask star({{1, 2, 3, 4, 5}, {}, {}, {}, {}, {}}, 0, {leaf});
    const double freq = to_double(empirical_success_probability(star, 1, kTrials, 100 + leaf));
    CHECK(std::abs(freq - 0.2) <= 3 * std::sqrt(0.2 * 0.8 / kTrials));
  }
  SplitMix64 rng(derive_seed(77, 0));
  std::vector<std::uint64_t> counts(7, 0);
  for (int i = 0; i < 70'000; ++i) counts[rng.uniform(7)]++;
  CHECK(testing::chi_square_statistic(counts, std::vector<double>(7, 10'000)) < testing::chi_square_critical(6, 0.001));
}

TEST_CASE("empirical success probability") {
  const TreeTask task = make_tree_task({4, 6, 16, 5});
  constexpr std::uint64_t kTrials = 1'000'000;
  const double est = to_double(empirical_success_probability(task, 6, kTrials, 99));
  const double p = 1.0 / 256;
  CHECK(std::abs(est - p) <= 3 * std::sqrt(p * (1 - p) / kTrials));

  CHECK(empirical_success_probability(make_tree_task({3, 3, 27, 0}), 3, 1000, 1) == 1);
  CHECK(empirical_success_probability(chain3(), 2, 1000, 1) == 1);
  CHECK(empirical_success_probability(chain3(), 1, 1000, 1) == 0);
  CHECK_THROWS_AS(empirical_success_probability(chain3(), 2, 0, 1), InvalidInput);
}

TEST_CASE("RRW errors and budgets") {
  SUBCASE("walk budget") {
    const RunStats r = run_rrw(make_tree_task({4, 6, 1, 0}), {.depth_error = 1, .walk_seed = 1, .max_walks = 3});
    if (!r.found) {
      CHECK(r.walks == 3);
      CHECK(r.goal_tests == 1 + 3 * 6);
      CHECK(r.goal_tests == r.successor_generations + 1);
    }
    CHECK_THROWS_AS(run_rrw(chain3(), {.depth_error = 1, .walk_seed = 1, .max_walks = 0}), InvalidInput);
  }
  SUBCASE("dead end before the cutoff") {
    // 0 -> {1, 2}, 2 -> 3 (goal); vertex 1 has no successors.
    const GraphTask task({{1, 2}, {}, {3}, {}}, 0, {3});
    CHECK_THROWS_AS(
        [&] {
          for (std::uint64_t seed = 0; seed < 64; ++seed) run_rrw(task, {.depth_error = 1, .walk_seed = seed});
        }(),
        DeadEnd);
    CHECK_THROWS_AS(empirical_success_probability(task, 2, 1000, 3), DeadEnd);
  }
  SUBCASE("cutoff beyond the chain end") {
    // With e = 2 the walk would need 4 steps; the goal at step 2 ends it first.
    CHECK(run_rrw(chain3(), {.depth_error = 2, .walk_seed = 0}).goal_tests == 3);
  }
  SUBCASE("invalid depth error") {
    CHECK_THROWS_AS(run_rrw(make_tree_task({4, 6, 16, 0}), {.depth_error = Rational(5, 4)}), InvalidInput);
    CHECK_THROWS_AS(run_rrw(make_tree_task({4, 6, 16, 0}), {.depth_error = Rational(1, 2)}), InvalidInput);
  }
  SUBCASE("unreachable goal") {
    CHECK_THROWS_AS(run_rrw(GraphTask({{1}, {0}, {}}, 0, {2}), {}), Unreachable);
  }
}

TEST_CASE("RRW finds goals between d* and e*d*") {
  // 0 -> {1, 2}; 1 -> 3 (goal, level 2); 2 -> 4 -> 5 (goal, level 3).
  const GraphTask task({{1, 2}, {3}, {4}, {}, {5}, {}}, 0, {3, 5});
  bool deep_hit = false;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const RunStats r = run_rrw(task, {.depth_error = 2, .walk_seed = seed});
    REQUIRE(r.found);
    CHECK(r.walks == 1);
    if (r.path.back() == 5) deep_hit = true;
  }
  CHECK(deep_hit);
}
