#include "plateau/montecarlo.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "plateau/errors.hpp"
#include "plateau/rng.hpp"
#include "plateau/rrw.hpp"
#include "plateau/task.hpp"

namespace plateau {
namespace {

using u128 = unsigned __int128;

Integer to_integer(u128 value) {
  Integer out = static_cast<std::uint64_t>(value >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(value);
  return out;
}

// Integer sums only, so merging partial accumulators in any order gives
// the same result.
struct Accumulator {
  std::uint64_t n = 0;
  u128 sum = 0;
  u128 sum_squares = 0;
  std::uint64_t budget_exceeded = 0;
  std::uint64_t accounting_violations = 0;
  std::uint64_t depth_violations = 0;

  void add(std::uint64_t x) {
    ++n;
    sum += x;
    sum_squares += static_cast<u128>(x) * x;
  }

  void merge(const Accumulator& other) {
    n += other.n;
    sum += other.sum;
    sum_squares += other.sum_squares;
    budget_exceeded += other.budget_exceeded;
    accounting_violations += other.accounting_violations;
    depth_violations += other.depth_violations;
  }
};

void check_options(const TreeShape& shape, const SimulationOptions& options) {
  if (options.trials < 2) throw InvalidInput("at least 2 trials are required");
  if (!(options.confidence > 0 && options.confidence < 1)) throw InvalidInput("confidence must lie in (0, 1)");
  // Validates the shape once up front instead of in every trial.
  make_tree_task(TreeTaskSpec{shape.branching, shape.goal_level, shape.goal_count, 0});
}

template <typename Trial>
Accumulator run_trials(const SimulationOptions& options, const Trial& trial) {
  unsigned workers = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  if (workers > options.trials) workers = static_cast<unsigned>(options.trials);

  std::vector<Accumulator> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t begin = options.trials * w / workers;
      const std::uint64_t end = options.trials * (w + 1) / workers;
      for (std::uint64_t i = begin; i < end; ++i) trial(i, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  Accumulator total;
  for (unsigned w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    total.merge(partial[w]);
  }
  return total;
}

EstimateSummary summarize(const Accumulator& acc, const SimulationOptions& options) {
  EstimateSummary out;
  out.trials = acc.n;
  out.base_seed = options.base_seed;
  out.confidence = options.confidence;
  out.budget_exceeded = acc.budget_exceeded;
  out.accounting_violations = acc.accounting_violations;
  out.depth_violations = acc.depth_violations;
  if (acc.n == 0) return out;

  const Integer n = acc.n;
  const Integer sum = to_integer(acc.sum);
  out.mean_exact = Rational(sum, n);
  out.mean = to_double(out.mean_exact);
  if (acc.n >= 2) {
    const Rational variance(n * to_integer(acc.sum_squares) - sum * sum, n * (n - 1));
    out.variance = to_double(variance);
  }
  out.std_error = std::sqrt(out.variance / static_cast<double>(acc.n));
  const boost::math::normal standard;
  const double z = boost::math::quantile(standard, 0.5 + options.confidence / 2);
  out.ci_low = out.mean - z * out.std_error;
  out.ci_high = out.mean + z * out.std_error;
  return out;
}

TreeTaskSpec trial_spec(const TreeShape& shape, std::uint64_t trial_seed) {
  return TreeTaskSpec{shape.branching, shape.goal_level, shape.goal_count, derive_seed(trial_seed, 0)};
}

}  // namespace

EstimateSummary estimate_brfs(const TreeShape& shape, TieMode tie, const SimulationOptions& options) {
  check_options(shape, options);
  auto trial = [&](std::uint64_t i, Accumulator& acc) {
    const std::uint64_t trial_seed = derive_seed(options.base_seed, i);
    const TreeTask task = make_tree_task(trial_spec(shape, trial_seed));
    const BrfsOptions brfs{.tie = {tie, derive_seed(trial_seed, 1)}};
    const RunStats stats = run_brfs(task, brfs);
    if (!stats.found || stats.goal_tests != stats.successor_generations + 1) ++acc.accounting_violations;
    if (stats.max_tested_level > shape.goal_level) ++acc.depth_violations;
    acc.add(stats.goal_tests);
  };
  return summarize(run_trials(options, trial), options);
}

EstimateSummary estimate_rrw(const TreeShape& shape, const Rational& depth_error, const SimulationOptions& options) {
  check_options(shape, options);
  walk_depth(shape.goal_level, depth_error);
  auto trial = [&](std::uint64_t i, Accumulator& acc) {
    const std::uint64_t trial_seed = derive_seed(options.base_seed, i);
    const TreeTask task = make_tree_task(trial_spec(shape, trial_seed));
    const RrwConfig config{depth_error, derive_seed(trial_seed, 1), options.max_walks};
    const RunStats stats = run_rrw(task, config);
    if (!stats.found) {
      ++acc.budget_exceeded;
      return;
    }
    if (stats.goal_tests != stats.successor_generations + 1) ++acc.accounting_violations;
    acc.add(stats.goal_tests);
  };
  return summarize(run_trials(options, trial), options);
}

ValidationReport validate_against(const Expectation& analytic, const EstimateSummary& estimate, double z_threshold) {
  ValidationReport report{.analytic = analytic, .estimate = estimate, .z_threshold = z_threshold};
  if (estimate.trials == 0) {
    report.z_score = std::numeric_limits<double>::infinity();
  } else if (estimate.std_error == 0) {
    report.z_score = estimate.mean_exact == analytic.value ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    report.z_score = to_double(estimate.mean_exact - analytic.value) / estimate.std_error;
  }
  report.pass = std::abs(report.z_score) <= z_threshold;
  return report;
}

ValidationReport validate(const TreeShape& shape, const std::optional<Rational>& depth_error,
                          const SimulationOptions& options, double z_threshold, TieMode tie) {
  if (depth_error) {
    const Expectation analytic = expected_rrw_tree(shape.branching, shape.goal_level, shape.goal_count, *depth_error);
    return validate_against(analytic, estimate_rrw(shape, *depth_error, options), z_threshold);
  }
  const Expectation analytic = expected_brfs_tree(shape.branching, shape.goal_level, shape.goal_count);
  return validate_against(analytic, estimate_brfs(shape, tie, options), z_threshold);
}

}  // namespace plateau
