#include <doctest.h>

#include "divgen/genbin.hpp"
#include "divgen/lift.hpp"

using namespace divgen;

TEST_CASE("binarize_seed thresholds at the interval midpoint") {
  const BoundedVector x =
      BoundedVector::uniform_bounds({1.0, 9.0, 7.0}, BoundedInterval(0.0, 10.0));
  CHECK(binarize_seed(x) == BinaryVector({0, 1, 1}));

  const BoundedVector mid = BoundedVector::uniform_bounds({5.0}, BoundedInterval(0.0, 10.0));
  LiftPolicy policy;
  policy.midpoint_bit = 1;
  CHECK(binarize_seed(mid, policy) == BinaryVector({1}));
  policy.midpoint_bit = 0;
  CHECK(binarize_seed(mid, policy) == BinaryVector({0}));
  policy.midpoint_bit = 2;
  CHECK_THROWS_AS(binarize_seed(mid, policy), std::invalid_argument);

  const BoundedVector lows =
      BoundedVector::uniform_bounds({0.0, 0.0, 0.0}, BoundedInterval(0.0, 10.0));
  CHECK(binarize_seed(lows) == BinaryVector({0, 0, 0}));
}

TEST_CASE("lift rule R1 maps bits to contracted bounds") {
  const BoundedVector seed = BoundedVector::uniform_bounds(
      {1.0, 9.0, 7.0}, BoundedInterval(0.0, 10.0, 0.2, 0.2));  // L° = 2, U° = 8
  BinaryCollection bin;
  bin.members.push_back(BinaryVector({1, 0, 1}));
  const BoundedCollection lifted = lift_collection(seed, bin);
  REQUIRE(lifted.size() == 2);
  CHECK(lifted.members[0].values == std::vector<double>{1.0, 9.0, 7.0});  // seed first
  CHECK(lifted.members[1].values == std::vector<double>{8.0, 2.0, 8.0});
}

TEST_CASE("lift rule R2 keeps seed values where the bits agree") {
  const BoundedVector seed = BoundedVector::uniform_bounds(
      {1.0, 9.0, 7.0}, BoundedInterval(0.0, 10.0, 0.2, 0.2));
  BinaryCollection bin;
  bin.members.push_back(BinaryVector({0, 0, 1}));  // binarized seed is (0,1,1)
  LiftPolicy policy;
  policy.rule = LiftPolicy::Rule::R2;
  const BoundedCollection lifted = lift_collection(seed, bin, policy);
  CHECK(lifted.members[1].values == std::vector<double>{1.0, 2.0, 7.0});
}

TEST_CASE("lifting the complement of the binarized seed under either rule is the DBL opposite") {
  Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const double lambda = rng.uniform(0.0, 0.5);  // lambda_L = lambda_U, see notes
    std::vector<double> values;
    std::vector<BoundedInterval> intervals;
    std::vector<std::uint8_t> integral;
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = rng.uniform(-10.0, 10.0);
      const double hi = lo + rng.uniform(1.0, 20.0);
      intervals.emplace_back(lo, hi, lambda, lambda);
      const bool integ = rng.bit() == 1;
      integral.push_back(integ ? 1 : 0);
      double v = rng.uniform(lo, hi);
      if (integ) v = nearest_feasible_integer(v, v, intervals.back());
      values.push_back(v);
    }
    const BoundedVector seed(values, intervals, integral);

    BinaryCollection bin;
    bin.members.push_back(binarize_seed(seed).complemented());

    LiftPolicy r1;
    r1.rule = LiftPolicy::Rule::R1;
    LiftPolicy r2;
    r2.rule = LiftPolicy::Rule::R2;
    const BoundedVector lifted_r1 = lift_collection(seed, bin, r1).members[1];
    const BoundedVector lifted_r2 = lift_collection(seed, bin, r2).members[1];
    const BoundedVector opposite = dbl_opposite_vector(seed);

    CHECK(lifted_r1.values == opposite.values);
    CHECK(lifted_r2.values == opposite.values);
  }
}

TEST_CASE("binary degeneration: unit box, zero lambda, R1 reproduces the bits") {
  Rng rng(53);
  const BinaryVector bseed = BinaryVector::random(12, rng);
  std::vector<double> values(bseed.bits.begin(), bseed.bits.end());
  const BoundedVector seed = BoundedVector::uniform_bounds(
      values, BoundedInterval(0.0, 1.0, 0.0, 0.0), true);

  const BinaryCollection bin = sequential_generator(bseed);
  const BoundedCollection lifted = lift_collection(seed, bin);
  REQUIRE(lifted.size() == bin.size() + 1);
  for (std::size_t i = 0; i < bin.size(); ++i) {
    for (std::size_t j = 0; j < bseed.size(); ++j) {
      CHECK(lifted.members[i + 1].values[j] == static_cast<double>(bin.members[i].bits[j]));
    }
  }
}

TEST_CASE("lifted components stay on contracted bounds (R1) or keep the seed (R2)") {
  const BoundedVector seed = BoundedVector::uniform_bounds(
      {3.0, 14.0, 8.5, 11.0}, BoundedInterval(2.0, 16.0, 0.25, 0.1));
  const BinaryCollection bin = sequential_generator(binarize_seed(seed));

  LiftPolicy r2;
  r2.rule = LiftPolicy::Rule::R2;
  const BoundedCollection lifted = lift_collection(seed, bin, r2);
  const auto [lo, hi] = dbl_bounds(seed.intervals[0]);
  for (std::size_t i = 1; i < lifted.size(); ++i) {
    for (std::size_t j = 0; j < seed.size(); ++j) {
      const double v = lifted.members[i].values[j];
      CHECK((v == lo || v == hi || v == seed.values[j]));
    }
  }
}

TEST_CASE("per-component lambda draws are shared by all members and recorded") {
  const BoundedVector seed = BoundedVector::uniform_bounds(
      {1.0, 9.0, 3.0, 6.0, 2.0}, BoundedInterval(0.0, 10.0));
  LiftPolicy policy;
  policy.lambda = LambdaPolicy::per_component_random({1.0 / 5.0, 2.0 / 5.0}, 1234);
  const BinaryCollection bin = sequential_generator(binarize_seed(seed));
  const BoundedCollection lifted = lift_collection(seed, bin, policy);

  for (const auto& member : lifted.members) {
    CHECK(member.intervals == lifted.members.front().intervals);
  }
  CHECK(lifted.provenance.params.count("lambda_draws_lower") == 1);
  CHECK(lifted.provenance.rng_seed == 1234);

  // replaying with the same policy reproduces the collection exactly
  const BoundedCollection again = lift_collection(seed, bin, policy);
  REQUIRE(again.size() == lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    CHECK(again.members[i] == lifted.members[i]);
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const BoundedVector seed =
      BoundedVector::uniform_bounds({1.0, 2.0}, BoundedInterval(0.0, 10.0));
  BinaryCollection bin;
  bin.members.push_back(BinaryVector({1, 0, 1}));
  CHECK_THROWS_AS(lift_collection(seed, bin), std::invalid_argument);
}
