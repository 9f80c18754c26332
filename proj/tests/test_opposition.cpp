#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "divgen/opposition.hpp"

using namespace divgen;

namespace {

constexpr double kTol = 1e-9;

// Independent grid-search oracle: the best achievable minimum distance to
// the column values over [lo, hi], scanned at the given resolution.
struct GridResult {
  double point;
  double dist;
};

GridResult grid_maxmin(const std::vector<double>& values, double lo, double hi, int steps) {
  GridResult best{lo, -1.0};
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / steps;
    double d = std::numeric_limits<double>::infinity();
    for (double v : values) d = std::min(d, std::abs(x - v));
    if (d > best.dist) best = {x, d};
  }
  return best;
}

double min_dist(double x, const std::vector<double>& values) {
  double d = std::numeric_limits<double>::infinity();
  for (double v : values) d = std::min(d, std::abs(x - v));
  return d;
}

}  // namespace

TEST_CASE("obl_opposite matches the reflection rule") {
  CHECK(obl_opposite(0.5, BoundedInterval(0.0, 1.0)) == doctest::Approx(0.5).epsilon(kTol));
  CHECK(obl_opposite(0.0, BoundedInterval(0.0, 7.0)) == doctest::Approx(7.0));
  CHECK(obl_opposite(0.3, BoundedInterval(0.0, 1.0)) == doctest::Approx(0.7));
  CHECK_THROWS_AS(obl_opposite(1.5, BoundedInterval(0.0, 1.0)), std::domain_error);
}

TEST_CASE("obl_opposite is an involution staying inside the interval") {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const double lo = rng.uniform(-20.0, 20.0);
    const double hi = lo + rng.uniform(0.0, 40.0);
    const BoundedInterval iv(lo, hi);
    const double x = rng.uniform(lo, hi);
    const double opp = obl_opposite(x, iv);
    CHECK(opp >= lo - kTol);
    CHECK(opp <= hi + kTol);
    CHECK(obl_opposite(opp, iv) == doctest::Approx(x).epsilon(kTol));
  }
}

TEST_CASE("dbl_bounds computes the contracted targets") {
  auto [lo, hi] = dbl_bounds(BoundedInterval(0.0, 1.0, 0.2, 0.2));
  CHECK(lo == doctest::Approx(0.2));
  CHECK(hi == doctest::Approx(0.8));

  auto [lo0, hi0] = dbl_bounds(BoundedInterval(3.0, 9.0, 0.0, 0.0));
  CHECK(lo0 == 3.0);
  CHECK(hi0 == 9.0);

  auto [lon, hin] = dbl_bounds(BoundedInterval(-5.0, 5.0, 0.1, 0.3));
  CHECK(lon == doctest::Approx(-4.0));
  CHECK(hin == doctest::Approx(2.0));

  CHECK_THROWS_AS(dbl_bounds(BoundedInterval(0.0, 1.0, 0.5, 0.2)), std::invalid_argument);
  CHECK_THROWS_AS(dbl_bounds(BoundedInterval(0.0, 1.0, 0.2, -0.1)), std::invalid_argument);
}

TEST_CASE("dbl_opposite picks the farther contracted target") {
  const BoundedInterval iv(0.0, 1.0, 0.2, 0.2);  // L° = 0.2, U° = 0.8
  CHECK(dbl_opposite(0.9, iv) == doctest::Approx(0.2));
  CHECK(dbl_opposite(0.1, iv) == doctest::Approx(0.8));
  // midpoint tie: the default policy takes U°, the config flag L° or a coin
  CHECK(dbl_opposite(0.5, iv) == doctest::Approx(0.8));
  CHECK(dbl_opposite(0.5, iv, false, MidpointTie::ChooseLower) == doctest::Approx(0.2));
  Rng coin(5);
  const double settled = dbl_opposite(0.5, iv, false, MidpointTie::Random, &coin);
  CHECK((settled == doctest::Approx(0.2) || settled == doctest::Approx(0.8)));
  CHECK_THROWS_AS(dbl_opposite(0.5, iv, false, MidpointTie::Random, nullptr),
                  std::invalid_argument);
  // x' far outside [L°, U°], and even outside [L, U], is still accepted
  CHECK(dbl_opposite(4.0, iv) == doctest::Approx(0.2));
  CHECK(dbl_opposite(-3.0, iv) == doctest::Approx(0.8));
}

TEST_CASE("dbl_opposite on binary integral components is the complement for any lambda") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const BoundedInterval iv(0.0, 1.0, rng.uniform(0.0, 0.5), rng.uniform(0.0, 0.5));
    CHECK(dbl_opposite(1.0, iv, true) == 0.0);
    CHECK(dbl_opposite(0.0, iv, true) == 1.0);
  }
}

TEST_CASE("integral rounding goes away from x'") {
  // L° = 2.5, U° = 7.5; x' = 2 below midpoint 5 so the raw target is 7.5
  const BoundedInterval iv(0.0, 10.0, 0.25, 0.25);
  CHECK(dbl_opposite(2.0, iv, true) == 8.0);
  CHECK(dbl_opposite(8.0, iv, true) == 2.0);
}

TEST_CASE("dbl is nondegenerate at the midpoint where obl collapses") {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const double lo = rng.uniform(-10.0, 10.0);
    const double hi = lo + rng.uniform(0.1, 20.0);
    const BoundedInterval iv(lo, hi, rng.uniform(0.0, 0.5), rng.uniform(0.0, 0.5));
    const double mid = iv.midpoint();
    CHECK(std::abs(obl_opposite(mid, iv) - mid) == doctest::Approx(0.0).epsilon(kTol));
    const double x2 = dbl_opposite(mid, iv);
    const auto [clo, chi] = dbl_bounds(iv);
    CHECK((x2 == doctest::Approx(clo) || x2 == doctest::Approx(chi)));
  }
}

TEST_CASE("dbl_opposite_vector complements binary vectors with fixed lambda 0") {
  BoundedVector x = BoundedVector::uniform_bounds({0.0, 1.0, 1.0},
                                                  BoundedInterval(0.0, 1.0, 0.0, 0.0), true);
  const BoundedVector opp = dbl_opposite_vector(x, LambdaPolicy::fixed(0.0, 0.0));
  CHECK(opp.values == std::vector<double>{1.0, 0.0, 0.0});
}

TEST_CASE("dbl_opposite_vector with random lambdas lands on a contracted target") {
  BoundedVector x = BoundedVector::uniform_bounds({2.0, 9.5, 4.4, 7.7},
                                                  BoundedInterval(0.0, 10.0));
  const auto policy = LambdaPolicy::per_component_random({1.0 / 6.0, 1.0 / 3.0}, 99);
  const BoundedVector opp = dbl_opposite_vector(x, policy);
  for (std::size_t j = 0; j < opp.size(); ++j) {
    const auto [lo, hi] = dbl_bounds(opp.intervals[j]);
    CHECK((opp.values[j] == doctest::Approx(lo) || opp.values[j] == doctest::Approx(hi)));
    // the lambdas actually drawn are recorded on the result's intervals
    CHECK(opp.intervals[j].lambda_lower >= 1.0 / 6.0);
    CHECK(opp.intervals[j].lambda_lower <= 1.0 / 3.0);
  }
  const BoundedVector again = dbl_opposite_vector(x, policy);
  CHECK(again.values == opp.values);

  CHECK_THROWS_AS(dbl_opposite_vector(x, LambdaPolicy::per_component_random({0.2, 0.6}, 1)),
                  std::invalid_argument);
}

TEST_CASE("maxmin component: paper-style examples against the grid oracle") {
  SortedColumn col;
  col.values = {2.0, 3.0, 9.0};
  col.lower_sentinel = 0.0;
  col.upper_sentinel = 10.0;
  const double got = maxmin_opposite_component(col);
  const GridResult oracle = grid_maxmin(col.values, 0.0, 10.0, 10000);
  CHECK(got == doctest::Approx(6.0));
  CHECK(min_dist(got, col.values) >= oracle.dist - 1e-3);

  // a single value at L: the whole gap to U wins
  CHECK(maxmin_opposite_component({{0.0}, 0.0, 10.0}) == doctest::Approx(10.0));
  // equal gaps tie to the smallest h, i.e. the lower sentinel
  CHECK(maxmin_opposite_component({{5.0}, 0.0, 10.0}) == doctest::Approx(0.0));

  CHECK_THROWS_AS(maxmin_opposite_component({{}, 0.0, 1.0}), std::domain_error);
}

TEST_CASE("maxmin component retains duplicates; zero-width gaps never win") {
  SortedColumn col;
  col.values = {2.0, 2.0, 9.0};
  col.lower_sentinel = 0.0;
  col.upper_sentinel = 10.0;
  CHECK(maxmin_opposite_component(col) == doctest::Approx(5.5));

  // all values identical and equal to both sentinels: degenerate but defined
  CHECK(maxmin_opposite_component({{5.0, 5.0}, 5.0, 5.0}) == doctest::Approx(5.0));
}

TEST_CASE("maxmin component dominates every grid point on random instances") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const double lo = rng.uniform(-5.0, 5.0);
    const double hi = lo + rng.uniform(0.5, 20.0);
    const int r = 1 + static_cast<int>(rng.below(10));
    SortedColumn col;
    col.lower_sentinel = lo;
    col.upper_sentinel = hi;
    for (int i = 0; i < r; ++i) col.values.push_back(rng.uniform(lo, hi));
    std::sort(col.values.begin(), col.values.end());
    const double got = maxmin_opposite_component(col);
    const GridResult oracle = grid_maxmin(col.values, lo, hi, 1000);
    const double step = (hi - lo) / 1000.0;
    CHECK(min_dist(got, col.values) >= oracle.dist - step);
  }
}

TEST_CASE("maxmin over a collection works componentwise") {
  BoundedCollection c;
  const BoundedInterval iv(0.0, 10.0);
  c.members.push_back(BoundedVector::uniform_bounds({2.0}, iv));
  c.members.push_back(BoundedVector::uniform_bounds({3.0}, iv));
  c.members.push_back(BoundedVector::uniform_bounds({9.0}, iv));
  const BoundedVector opp = maxmin_opposite(c, {iv});
  CHECK(opp.values[0] == doctest::Approx(6.0));

  BoundedCollection empty;
  CHECK_THROWS_AS(maxmin_opposite(empty, {iv}), std::domain_error);
}

TEST_CASE("maxmin with a column containing both bounds picks the widest interior gap") {
  const BoundedInterval iv(0.0, 10.0);
  BoundedCollection c;
  c.members.push_back(BoundedVector::uniform_bounds({0.0}, iv));
  c.members.push_back(BoundedVector::uniform_bounds({10.0}, iv));
  const BoundedVector opp = maxmin_opposite(c, {iv});
  const GridResult oracle = grid_maxmin({0.0, 10.0}, 0.0, 10.0, 10000);
  CHECK(opp.values[0] == doctest::Approx(oracle.point).epsilon(1e-3));
  CHECK(opp.values[0] == doctest::Approx(5.0));
}

TEST_CASE("maxmin on a single member with contracted sentinels equals dbl_opposite") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const double lo = rng.uniform(-10.0, 0.0);
    const double hi = lo + rng.uniform(1.0, 10.0);
    const BoundedInterval iv(lo, hi, rng.uniform(0.0, 0.45), rng.uniform(0.0, 0.45));
    double x = rng.uniform(lo, hi);
    if (std::abs(x - iv.contracted_midpoint()) < 1e-6) x += 0.1;  // skip the tie
    BoundedCollection c;
    c.members.push_back(BoundedVector::uniform_bounds({x}, iv));
    const BoundedVector got = maxmin_opposite(c, {iv}, /*contracted_sentinels=*/true);
    CHECK(got.values[0] == doctest::Approx(dbl_opposite(x, iv)).epsilon(kTol));
  }
}
