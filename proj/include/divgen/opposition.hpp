#pragma once

#include <utility>
#include <vector>

#include "divgen/core.hpp"

namespace divgen {

/// How dbl_opposite settles the exact-midpoint tie between L° and U°.
/// The default is the deterministic ChooseUpper; Random settles each tie
/// with a coin flip from a caller-supplied Rng.
enum class MidpointTie { ChooseUpper, ChooseLower, Random };

/// Source of the contraction parameters used by dbl_opposite_vector and
/// lift_collection.
///
///   FromIntervals      use each component's own lambda fields (default)
///   Fixed              one (lambda_L, lambda_U) pair for every component
///   PerComponentRandom draw lambda_L, lambda_U independently per component
///                      from the given sub-intervals of [0, 0.5)
struct LambdaPolicy {
  enum class Kind { FromIntervals, Fixed, PerComponentRandom };

  Kind kind = Kind::FromIntervals;
  double fixed_lower = 0.2;
  double fixed_upper = 0.3;
  std::pair<double, double> sample_lower{1.0 / 6.0, 1.0 / 3.0};
  std::pair<double, double> sample_upper{1.0 / 6.0, 1.0 / 3.0};
  std::uint64_t rng_seed = 0;

  static LambdaPolicy from_intervals() { return {}; }

  static LambdaPolicy fixed(double lambda_lower, double lambda_upper) {
    LambdaPolicy p;
    p.kind = Kind::Fixed;
    p.fixed_lower = lambda_lower;
    p.fixed_upper = lambda_upper;
    return p;
  }

  static LambdaPolicy per_component_random(std::pair<double, double> range,
                                           std::uint64_t seed) {
    return per_component_random(range, range, seed);
  }

  static LambdaPolicy per_component_random(std::pair<double, double> range_lower,
                                           std::pair<double, double> range_upper,
                                           std::uint64_t seed) {
    LambdaPolicy p;
    p.kind = Kind::PerComponentRandom;
    p.sample_lower = range_lower;
    p.sample_upper = range_upper;
    p.rng_seed = seed;
    return p;
  }

  /// Effective (lambda_L, lambda_U) per component for a vector of intervals.
  /// Random draws consume one Rng seeded with rng_seed; the draws are what
  /// callers record in provenance.
  std::vector<std::pair<double, double>> resolve(
      const std::vector<BoundedInterval>& intervals) const;
};

/// Classical reflection opposite U + L - x'. Degenerates at the interval
/// midpoint, where the "opposite" equals x' itself.
double obl_opposite(double x_prime, const BoundedInterval& interval);

/// Contracted targets (L°, U°). Throws std::invalid_argument when a lambda
/// lies outside [0, 0.5) or the interval is inverted.
std::pair<double, double> dbl_bounds(const BoundedInterval& interval);

/// Farthest point of {L°, U°} from x'. Any finite x' is accepted, including
/// values outside [L°, U°] or even [L, U]. For integral components the raw
/// target is rounded to the nearest integer, half-way cases away from x',
/// then clamped to the integer range of [L, U].
double dbl_opposite(double x_prime, const BoundedInterval& interval,
                    bool integral = false,
                    MidpointTie tie = MidpointTie::ChooseUpper,
                    Rng* tie_rng = nullptr);

/// Componentwise dbl_opposite. The returned vector's intervals carry the
/// lambda values the policy actually used, so random draws are inspectable
/// and reproducible.
BoundedVector dbl_opposite_vector(const BoundedVector& x_prime,
                                  const LambdaPolicy& policy = {},
                                  MidpointTie tie = MidpointTie::ChooseUpper,
                                  Rng* tie_rng = nullptr);

/// One component's collection values, sorted, framed by sentinel end values
/// that act as the outermost entries of the column.
struct SortedColumn {
  std::vector<double> values;
  double lower_sentinel = 0.0;
  double upper_sentinel = 1.0;
};

/// The point of [lower_sentinel, upper_sentinel] maximizing the minimum
/// distance to the column values. Candidates are the two sentinels and the
/// midpoints of consecutive-value gaps; a sentinel realizes its whole gap as
/// distance while an interior midpoint realizes half its gap, and the
/// candidate with the largest realized distance wins (ties go to the
/// smallest gap index). Throws std::domain_error on an empty column.
double maxmin_opposite_component(const SortedColumn& column);

/// Componentwise max-min opposite of a collection. With
/// `contracted_sentinels` the per-component sentinels are L°_j, U°_j instead
/// of L_j, U_j, which reproduces dbl_opposite when the collection has a
/// single member. Integral components are rounded to the nearest feasible
/// integer.
BoundedVector maxmin_opposite(const BoundedCollection& collection,
                              const std::vector<BoundedInterval>& bounds,
                              bool contracted_sentinels = false);

}  // namespace divgen
