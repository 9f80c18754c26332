#pragma once

#include <vector>

#include "divgen/core.hpp"

namespace divgen {

/// Proximity objective toward an anchor solution, in one of two shapes:
/// a linear form sum f_j x_j to maximize (binary anchors, f_j positive
/// exactly where the anchor bit is 1), or a weighted L1 distance
/// sum f_j |x_j - x0_j| to minimize (any anchor, all f_j positive).
struct ProximityObjective {
  enum class Sense { MaximizeLinear, MinimizeWeightedL1 };

  Sense sense = Sense::MaximizeLinear;
  std::vector<double> coefficients;
  std::vector<double> anchor;

  std::size_t size() const { return coefficients.size(); }
};

/// Counts how often each component matched the anchor value over `total`
/// recorded solutions.
struct FrequencyMemory {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  void record(const BinaryVector& anchor, const BinaryVector& solution);
};

/// Partition-structured feasible region.
///
///   Gub                        sum of x_j over each block equals 1
///   GeneralizedMultipleChoice  sum over block i equals rhs[i]
///   Cardinality                single block, sum equals rhs[0]
///   Box                        componentwise bounds, no coupling
struct ConstraintSystem {
  enum class Kind { Gub, GeneralizedMultipleChoice, Cardinality, Box };

  Kind kind = Kind::Gub;
  std::vector<std::vector<int>> blocks;  // 0-based in code, 1-based in JSON
  std::vector<int> rhs;
  std::vector<BoundedInterval> box_bounds;

  std::size_t dimension() const;

  static ConstraintSystem gub(std::vector<std::vector<int>> blocks);
  static ConstraintSystem generalized_multichoice(std::vector<std::vector<int>> blocks,
                                                  std::vector<int> rhs);
  static ConstraintSystem cardinality(int n, int m1);
  static ConstraintSystem box(std::vector<BoundedInterval> bounds);

  /// Partition and right-hand-side checks against dimension n; throws
  /// std::invalid_argument on the first violation.
  void check(std::size_t n) const;

  bool satisfied_by(const BinaryVector& x) const;
};

/// Unit coefficients: f_j = +1 where the anchor bit is 1, -1 where it is 0.
ProximityObjective build_coefficients(const BinaryVector& anchor);

/// Frequency-shaped coefficients f_j = sign_j (1 + beta count_j / total),
/// optionally perturbed by a jitter of beta (u - 0.5), u uniform in [0, 1),
/// to break ties between equally close feasible solutions. Magnitudes are
/// floored at a small positive value so the sign pattern survives any beta.
ProximityObjective build_coefficients(const BinaryVector& anchor,
                                      const FrequencyMemory& memory, double beta,
                                      Rng* jitter = nullptr);

/// Weighted-L1 objective anchored at a bounded vector; empty weights mean
/// all ones. All weights must be positive.
ProximityObjective l1_objective(const BoundedVector& anchor,
                                std::vector<double> weights = {});

/// sum f_j x_j for the linear form, sum f_j |x_j - x0_j| for the L1 form.
double evaluate_proximity(const ProximityObjective& obj, const std::vector<double>& x);
double evaluate_proximity(const ProximityObjective& obj, const BinaryVector& x);
double evaluate_proximity(const ProximityObjective& obj, const BoundedVector& x);

/// Exact maximizer of a linear proximity objective over GUB constraints:
/// per block, the 1 goes to the largest coefficient (lowest index on ties).
BinaryVector project_gub(const ProximityObjective& obj, const ConstraintSystem& cs);

/// Exact maximizer over generalized multiple choice constraints: per block,
/// the rhs[i] largest coefficients get the 1s (lowest index on ties). Also
/// accepts Cardinality systems, the single-block special case.
BinaryVector project_generalized_multichoice(const ProximityObjective& obj,
                                             const ConstraintSystem& cs);

/// Single cardinality constraint over all n components.
BinaryVector project_cardinality(const ProximityObjective& obj, int m1, int n);

/// Componentwise clamp of the anchor into the box, integral components to
/// the nearest feasible integer. Minimizes any positively weighted L1
/// distance to the anchor.
BoundedVector project_box(const BoundedVector& anchor,
                          const std::vector<BoundedInterval>& bounds);

}  // namespace divgen
