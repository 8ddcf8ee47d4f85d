#include <doctest.h>

#include "oracles.hpp"
#include "plateau/analytics.hpp"
#include "plateau/crossover.hpp"
#include "plateau/errors.hpp"

using namespace plateau;
using plateau::testing::ipow;

namespace {

// Smallest g with E[R] <= E[B], by a plain scan over the closed forms.
std::uint64_t scan_crossover(std::uint64_t b, std::uint32_t d, const Rational& e) {
  for (std::uint64_t g = 1;; ++g) {
    if (expected_rrw_tree(b, d, g, e).value <= expected_brfs_tree(b, d, g).value) return g;
  }
}

}  // namespace

TEST_CASE("crossover_bound cases") {
  CHECK(crossover_bound(4, 6, 1).goals == 16);
  CHECK(crossover_bound(4, 6, 1).source == BoundSource::linear_bound);
  CHECK(crossover_bound(2, 2, 1).goals == 3);
  CHECK(crossover_bound(2, 2, 1).source == BoundSource::goal_level_two);
  CHECK(crossover_bound(4, 6, 2).goals == 34);
  CHECK(crossover_bound(4, 1, 1).goals == 4);
  CHECK(crossover_bound(4, 1, 1).source == BoundSource::goal_level_one);
  CHECK(crossover_bound(4, 1, 2).source == BoundSource::empirical_fallback);
  CHECK(crossover_bound(4, 1, 2).goals == *empirical_crossover(4, 1, 2));
  CHECK(crossover_bound(3, 2, Rational(3, 2)).goals == (3 - 1) * (3 - 1) + 1);
  CHECK_THROWS_AS(crossover_bound(1, 3, 1), InvalidInput);
  CHECK_THROWS_AS(crossover_bound(4, 3, Rational(3, 2)), InvalidInput);
}

TEST_CASE("empirical_crossover") {
  CHECK(*empirical_crossover(4, 6, 1) == 16);
  CHECK(expected_rrw_tree(4, 6, 15, 1).value > expected_brfs_tree(4, 6, 15).value);
  CHECK(expected_rrw_tree(4, 6, 16, 1).value < expected_brfs_tree(4, 6, 16).value);
  CHECK(*empirical_crossover(2, 2, 1) == 3);
  CHECK(expected_rrw_tree(2, 2, 2, 1).value == 5);
  CHECK(expected_brfs_tree(2, 2, 2).value == Rational(14, 3));
  CHECK(expected_brfs_tree(2, 2, 3).value == Rational(17, 4));
  CHECK(*empirical_crossover(4, 1, 1) == 4);
  // d*=1: RRW only ties at g = b, never strictly wins.
  for (std::uint64_t b = 2; b <= 8; ++b) {
    CHECK_FALSE(empirical_crossover(b, 1, 1, Comparison::strictly_less).has_value());
    CHECK(*empirical_crossover(b, 1, 1) == b);
  }
}

TEST_CASE("bisection agrees with the scan") {
  // Level sizes above 2^16 go through bisection.
  for (std::uint64_t b = 2; b <= 6; ++b) {
    for (std::uint32_t d = 2; d <= 8; ++d) {
      for (const Rational& e : {Rational(1), Rational(2)}) {
        CHECK(*empirical_crossover(b, d, e) == scan_crossover(b, d, e));
      }
    }
  }
  CHECK(ipow(6, 8) > (1u << 16));
  CHECK(*empirical_crossover(2, 40, 1) == scan_crossover(2, 40, 1));
}

TEST_CASE("bound is sufficient and never below the exact crossover") {
  for (std::uint64_t b = 2; b <= 6; ++b) {
    for (std::uint32_t d = 1; d <= 8; ++d) {
      for (std::uint32_t t = d; t <= 2 * d; ++t) {
        const Rational e(t, d);
        const std::uint64_t bound = crossover_bound(b, d, e).goals;
        CHECK(expected_rrw_tree(b, d, bound, e).value <= expected_brfs_tree(b, d, bound).value);
        const std::uint64_t exact = *empirical_crossover(b, d, e);
        CHECK(bound >= exact);
        if (exact > 1) CHECK(expected_rrw_tree(b, d, exact - 1, e).value > expected_brfs_tree(b, d, exact - 1).value);
        if (d >= 2) {
          const std::uint64_t n = ipow(b, d);
          CHECK(expected_brfs_tree(b, d, n).value >= expected_rrw_tree(b, d, n, e).value);
        }
      }
    }
  }
}

TEST_CASE("bound grows linearly with the goal level") {
  for (std::uint64_t b = 2; b <= 6; ++b) {
    for (const Rational& e : {Rational(1), Rational(2)}) {
      for (std::uint32_t d = 4; d <= 8; ++d) {
        CHECK(Rational(crossover_bound(b, d, e).goals) - Rational(crossover_bound(b, d - 1, e).goals) == e * (b - 1));
      }
    }
  }
}

TEST_CASE("density crossover") {
  CHECK(density_crossover(4, 6, 1) == Rational(1, 256));
  CHECK(density_crossover(4, 3, 1) == Rational(7, 64));
  CHECK(density_crossover(4, 2, 1) == Rational(5, 16));
  for (std::uint64_t b = 2; b <= 6; ++b) {
    for (const Rational& e : {Rational(1), Rational(2)}) {
      for (std::uint32_t d = 3; d <= 8; ++d) CHECK(density_crossover(b, d, e) < density_crossover(b, d - 1, e));
    }
  }
}

TEST_CASE("crossover_report") {
  const CrossoverReport r = crossover_report(4, 6, 1);
  CHECK(r.bound == 16);
  CHECK(r.exact == 16);
  CHECK(r.density_bound == Rational(1, 256));
  CHECK(r.density_exact == Rational(1, 256));
  CHECK(r.note.empty());
  CHECK_FALSE(crossover_report(4, 1, 1).note.empty());
  CHECK_FALSE(crossover_report(4, 1, 3).note.empty());
}

TEST_CASE("sweep_expected_tests") {
  const std::vector<Rational> e1{Rational(1)};
  const auto series = sweep_expected_tests(4, 6, e1, 1, 64);
  REQUIRE(series.size() == 2);
  CHECK(series[0].name == "brfs");
  CHECK(series[1].name == "rrw_e=1");
  CHECK(series[0].points.size() == 64);
  CHECK(series[0].points.front().y == Rational(6827, 2));
  CHECK(series[1].points.front().y == 24577);
  for (const auto& s : series) {
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      CHECK(s.points[i].x > s.points[i - 1].x);
      CHECK(s.points[i].y < s.points[i - 1].y);
    }
  }
  const auto tiny = sweep_expected_tests(2, 1, e1, 1, 2);
  CHECK(tiny[0].points[0].y < tiny[1].points[0].y);
  CHECK(tiny[0].points[1].y == tiny[1].points[1].y);

  const std::vector<Rational> odd{Rational(3, 2)};
  CHECK_THROWS_AS(sweep_expected_tests(4, 3, odd, 1, 4), InvalidInput);
  CHECK_THROWS_AS(sweep_expected_tests(4, 3, e1, 5, 4), InvalidInput);
}

TEST_CASE("sweep_crossover and sweep_density") {
  const std::vector<Rational> e1{Rational(1)};
  const auto cross = sweep_crossover(4, 2, 8, e1);
  REQUIRE(cross.size() == 2);
  std::vector<Rational> bounds;
  for (const auto& p : cross[0].points) bounds.push_back(p.y);
  CHECK(bounds == std::vector<Rational>{5, 7, 10, 13, 16, 19, 22});
  for (std::size_t i = 0; i < cross[0].points.size(); ++i) {
    CHECK(cross[0].points[i].y >= cross[1].points[i].y);
    CHECK(cross[0].points[i].y - cross[1].points[i].y <= 2);
  }

  const auto density = sweep_density(4, 2, 8, e1);
  REQUIRE(density.size() == 1);
  CHECK(density[0].points[0].y == Rational(5, 16));
  CHECK(density[0].points[1].y == Rational(7, 64));
  for (std::size_t i = 1; i < density[0].points.size(); ++i) CHECK(density[0].points[i].y < density[0].points[i - 1].y);

  const auto binary = sweep_density(2, 1, 2, e1);
  CHECK(binary[0].points[0].y == 1);
  CHECK(binary[0].points[1].y == Rational(3, 4));

  // Default depth errors skip odd goal levels for e = 3/2.
  const auto defaults = default_depth_errors();
  const auto mixed = sweep_density(4, 2, 5, defaults);
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[1].name == "density_e=3/2");
  CHECK(mixed[1].points.size() == 2);
  CHECK(mixed[0].points.size() == 4);
}
