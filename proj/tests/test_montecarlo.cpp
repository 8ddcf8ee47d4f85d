#include <doctest.h>

#include <cmath>
#include <limits>

#include "plateau/errors.hpp"
#include "plateau/montecarlo.hpp"

using namespace plateau;

TEST_CASE("saturated RRW has zero variance") {
  const EstimateSummary s = estimate_rrw({4, 2, 16}, 1, {.trials = 500, .base_seed = 1});
  CHECK(s.trials == 500);
  CHECK(s.mean_exact == 3);
  CHECK(s.variance == 0);
  CHECK(s.std_error == 0);
  const ValidationReport v = validate({4, 2, 16}, Rational(1), {.trials = 500, .base_seed = 1});
  CHECK(v.z_score == 0);
  CHECK(v.pass);
}

TEST_CASE("BrFS with a saturated goal level is constant") {
  const EstimateSummary s = estimate_brfs({3, 3, 27}, TieMode::uniform_random, {.trials = 200, .base_seed = 4});
  CHECK(s.mean_exact == 14);
  CHECK(s.variance == 0);
}

TEST_CASE("estimates are reproducible across thread counts") {
  const SimulationOptions one{.trials = 3000, .base_seed = 42, .threads = 1};
  const SimulationOptions four{.trials = 3000, .base_seed = 42, .threads = 4};
  CHECK(estimate_brfs({4, 4, 3}, TieMode::lexicographic, one).mean_exact ==
        estimate_brfs({4, 4, 3}, TieMode::lexicographic, four).mean_exact);
  CHECK(estimate_brfs({4, 4, 3}, TieMode::uniform_random, one).mean_exact ==
        estimate_brfs({4, 4, 3}, TieMode::uniform_random, four).mean_exact);
  const EstimateSummary a = estimate_rrw({2, 4, 2}, 2, one);
  const EstimateSummary b = estimate_rrw({2, 4, 2}, 2, four);
  CHECK(a.mean_exact == b.mean_exact);
  CHECK(a.variance == b.variance);
  CHECK(estimate_rrw({2, 4, 2}, 2, {.trials = 3000, .base_seed = 43}).mean_exact != a.mean_exact);
}

TEST_CASE("estimates carry no accounting or depth violations") {
  const SimulationOptions opts{.trials = 5000, .base_seed = 9};
  for (TieMode mode : {TieMode::lexicographic, TieMode::uniform_random}) {
    const EstimateSummary s = estimate_brfs({3, 4, 5}, mode, opts);
    CHECK(s.accounting_violations == 0);
    CHECK(s.depth_violations == 0);
  }
  const EstimateSummary r = estimate_rrw({3, 4, 5}, Rational(3, 2), opts);
  CHECK(r.accounting_violations == 0);
  CHECK(r.budget_exceeded == 0);
}

TEST_CASE("walk budget exclusions are counted") {
  const EstimateSummary s = estimate_rrw({4, 6, 1}, 1, {.trials = 200, .base_seed = 2, .max_walks = 2});
  CHECK(s.budget_exceeded > 150);
  CHECK(s.trials + s.budget_exceeded == 200);
}

TEST_CASE("confidence intervals cover the analytic mean at the nominal rate") {
  // 100 replications of a 99% interval; at least 95 should cover.
  const Rational analytic = expected_rrw_tree(2, 3, 2, 1).value;
  int covered = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    const EstimateSummary s =
        estimate_rrw({2, 3, 2}, 1, {.trials = 2000, .base_seed = 10'000 + rep, .confidence = 0.99});
    if (s.ci_low <= to_double(analytic) && to_double(analytic) <= s.ci_high) ++covered;
  }
  CHECK(covered >= 95);
}

TEST_CASE("validate passes on correct engines and fails on a shifted target") {
  const SimulationOptions opts{.trials = 20'000, .base_seed = 5};
  const ValidationReport brfs = validate({4, 3, 4}, std::nullopt, opts);
  CHECK(brfs.pass);
  CHECK(brfs.analytic.formula == Formula::brfs_tree);
  const ValidationReport rrw = validate({4, 3, 4}, Rational(2), opts);
  CHECK(rrw.pass);
  CHECK(std::abs(rrw.z_score) <= 4);

  Expectation shifted = rrw.analytic;
  shifted.value += Rational(static_cast<std::int64_t>(std::ceil(10 * rrw.estimate.std_error)) + 1);
  CHECK_FALSE(validate_against(shifted, rrw.estimate).pass);

  EstimateSummary constant = estimate_rrw({2, 2, 4}, 1, {.trials = 10, .base_seed = 0});
  Expectation off{Rational(4), Formula::rrw_tree};
  CHECK(validate_against(off, constant).z_score == std::numeric_limits<double>::infinity());
}

TEST_CASE("invalid simulation options") {
  CHECK_THROWS_AS(estimate_brfs({4, 3, 4}, TieMode::lexicographic, {.trials = 1}), InvalidInput);
  CHECK_THROWS_AS(estimate_rrw({4, 3, 65}, 1, {.trials = 10}), InvalidInput);
  CHECK_THROWS_AS(estimate_rrw({4, 3, 4}, 1, {.trials = 10, .confidence = 1.5}), InvalidInput);
}
