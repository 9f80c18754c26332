#pragma once

#include "divgen/core.hpp"
#include "divgen/opposition.hpp"

namespace divgen {

/// How binary diversification output is mapped back to bounded vectors.
///
///   R1  every component goes to a contracted bound: L°_j for a 0 bit,
///       U°_j for a 1 bit
///   R2  components whose bit agrees with the binarized seed keep the
///       seed's value; the rest follow R1
///
/// midpoint_bit settles which bit a seed component exactly at its interval
/// midpoint binarizes to.
struct LiftPolicy {
  enum class Rule { R1, R2 };

  Rule rule = Rule::R1;
  LambdaPolicy lambda = {};
  int midpoint_bit = 1;
};

/// Threshold map of a bounded seed to a binary seed: component j is 1 when
/// x_j lies above the midpoint of [L_j, U_j], 0 below, midpoint_bit at
/// exactly the midpoint.
BinaryVector binarize_seed(const BoundedVector& seed, const LiftPolicy& policy = {});

/// Maps a binary diverse collection back into bounded-vector space around
/// the seed. The seed itself is the first member. Lambda values are
/// resolved once per call (shared by all members) and recorded in the
/// provenance; each returned member's intervals carry them. Lifting the
/// complement of the binarized seed under either rule reproduces the DBL
/// opposite of the seed.
BoundedCollection lift_collection(const BoundedVector& seed,
                                  const BinaryCollection& binary_collection,
                                  const LiftPolicy& policy = {});

}  // namespace divgen
