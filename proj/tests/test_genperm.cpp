#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "divgen/genperm.hpp"

using namespace divgen;

namespace {

// Positions (1-based) of each label in a permutation.
std::vector<int> positions_of(const Permutation& p) {
  std::vector<int> pos(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(p.order[i])] = static_cast<int>(i) + 1;
  return pos;
}

// Minimum circular position separation in q between labels adjacent in the
// seed (consecutive labels, for an identity seed).
int min_circular_separation(const Permutation& q) {
  const int n = static_cast<int>(q.size());
  const std::vector<int> pos = positions_of(q);
  int best = n;
  for (int label = 1; label < n; ++label) {
    const int d = std::abs(pos[label] - pos[label + 1]);
    best = std::min(best, std::min(d, n - d));
  }
  return best;
}

}  // namespace

TEST_CASE("subsequence extracts the stride pattern") {
  const Permutation p = Permutation::identity(18);
  CHECK(subsequence(p, 5, 3) == std::vector<int>{3, 8, 13, 18});
  CHECK(subsequence(p, 4, 2) == std::vector<int>{2, 6, 10, 14, 18});
  CHECK(subsequence(p, 18, 7) == std::vector<int>{7});
  CHECK_THROWS_AS(subsequence(p, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(subsequence(p, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(subsequence(p, 19, 1), std::invalid_argument);
}

TEST_CASE("stride permutations of identity(18) match the printed sequences") {
  const Permutation p = Permutation::identity(18);
  const Permutation p5 = stride_permutation(p, 5);
  CHECK(p5.order == std::vector<int>{5, 10, 15, 4, 9, 14, 3, 8, 13, 18,
                                     2, 7, 12, 17, 1, 6, 11, 16});
  const Permutation p4 = stride_permutation(p, 4);
  CHECK(p4.order == std::vector<int>{4, 8, 12, 16, 3, 7, 11, 15, 2, 6,
                                     10, 14, 18, 1, 5, 9, 13, 17});
}

TEST_CASE("generate_perm with a single h emits that stride permutation") {
  PermGenParams params;
  params.h_values = {5};
  params.include_reversals = false;
  const PermutationCollection c = generate_perm(Permutation::identity(18), params);
  REQUIRE(c.size() == 1);
  CHECK(c.members[0] == stride_permutation(Permutation::identity(18), 5));
}

TEST_CASE("h = 1 contributes only the reversal") {
  PermGenParams params;
  params.h_values = {1};
  const Permutation p({3, 1, 4, 2, 5});
  const PermutationCollection c = generate_perm(p, params);
  REQUIRE(c.size() == 1);
  CHECK(c.members[0] == p.reversed());

  params.include_reversals = false;
  CHECK(generate_perm(p, params).size() == 0);
}

TEST_CASE("P(n) equals the reversal of P for n in {5, 18, 31}") {
  for (int n : {5, 18, 31}) {
    const Permutation p = Permutation::identity(static_cast<std::size_t>(n));
    CHECK(stride_permutation(p, n) == p.reversed());
  }
}

TEST_CASE("every emitted member is a valid permutation") {
  Rng rng(19);
  for (int n : {2, 7, 12, 18}) {
    // random seed permutation via Fisher-Yates on identity
    Permutation p = Permutation::identity(static_cast<std::size_t>(n));
    for (int i = n - 1; i > 0; --i) {
      std::swap(p.order[static_cast<std::size_t>(i)],
                p.order[rng.below(static_cast<std::uint64_t>(i + 1))]);
    }
    const PermutationCollection c = generate_perm(p, {});
    for (const auto& member : c.members) {
      CHECK(validate(member).ok());
    }
  }
}

TEST_CASE("non-identity seeds get the identity pattern applied to their positions") {
  Rng rng(29);
  Permutation p = Permutation::identity(12);
  for (int i = 11; i > 0; --i) {
    std::swap(p.order[static_cast<std::size_t>(i)],
              p.order[rng.below(static_cast<std::uint64_t>(i + 1))]);
  }
  for (int h = 2; h <= 6; ++h) {
    const Permutation pattern = stride_permutation(Permutation::identity(12), h);
    const Permutation direct = stride_permutation(p, h);
    for (std::size_t i = 0; i < 12; ++i) {
      CHECK(direct.order[i] == p.order[static_cast<std::size_t>(pattern.order[i]) - 1]);
    }
  }
}

TEST_CASE("sqrt presets pick the integers nearest the root") {
  CHECK(PermGenParams::sqrt_h_values(18) == std::vector<int>{4, 5});
  CHECK(PermGenParams::sqrt_h_values(16) == std::vector<int>{4});
  CHECK(PermGenParams::sqrt_h_values(25) == std::vector<int>{5});
  CHECK(PermGenParams::sqrt_h_values(2) == std::vector<int>{1, 2});
}

// Near h = sqrt(n) the stride pattern spreads seed-adjacent elements far
// apart. The literal bound h - 1 fails for the larger root at n = 18 (labels
// 3 and 4 sit three positions apart in the printed P(5)), so the assertion
// uses floor(sqrt(n)) - 1 for both candidate strides.
TEST_CASE("near-sqrt strides keep seed neighbors separated") {
  for (int n : {16, 18, 25}) {
    const int floor_root = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    for (int h : PermGenParams::sqrt_h_values(static_cast<std::size_t>(n))) {
      const Permutation ph =
          stride_permutation(Permutation::identity(static_cast<std::size_t>(n)), h);
      CHECK(min_circular_separation(ph) >= floor_root - 1);
    }
  }
}

TEST_CASE("default h range is 1..n/2 with reversals, duplicates suppressed") {
  const PermutationCollection c = generate_perm(Permutation::identity(10), {});
  // h = 1 gives one member, h = 2..5 give two each
  CHECK(c.size() == 9);
  // P(n) = P*(1): requesting both yields one reversal member plus P*(n) = P
  PermGenParams both;
  both.h_values = {1, 10};
  const PermutationCollection c2 = generate_perm(Permutation::identity(10), both);
  REQUIRE(c2.size() == 2);
  CHECK(c2.members[0] == Permutation::identity(10).reversed());
  CHECK(c2.members[1] == Permutation::identity(10));
}
