#pragma once

#include <vector>

#include "divgen/core.hpp"

namespace divgen {

/// Parameters of the permutation diversification generator.
/// An empty h_values means the default range 1..n/2. Reversals P*(h) are
/// emitted alongside each P(h) when include_reversals is set; for h = 1
/// only the reversal is emitted, since P(1) is the seed itself.
struct PermGenParams {
  std::vector<int> h_values;
  bool include_reversals = true;

  /// The one or two integers nearest sqrt(n), where the elements of P(h)
  /// spread the seed's neighbors farthest apart.
  static std::vector<int> sqrt_h_values(std::size_t n);
};

/// Elements of P at 1-based positions s, s+h, s+2h, ... Requires
/// 1 <= s <= h <= n.
std::vector<int> subsequence(const Permutation& p, int h, int s);

/// P(h) for the given seed: the concatenation of the stride-h subsequences
/// taken for s = h down to 1. For a non-identity seed the identity pattern
/// is applied to the seed's positions.
Permutation stride_permutation(const Permutation& p, int h);

/// Emits P(h) (and P*(h) when requested) for every h in params, skipping
/// P(1) = P. Duplicates are suppressed, so e.g. P(n) and P*(1) contribute
/// one member when both are requested.
PermutationCollection generate_perm(const Permutation& p, const PermGenParams& params);

}  // namespace divgen
