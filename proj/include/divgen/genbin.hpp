#pragma once

#include <cstdint>
#include <limits>

#include "divgen/core.hpp"

namespace divgen {

/// Parameters of the first diversification generator and its 1A variant.
///
/// h is the flip stride: each output complements the seed on the positions
/// q, q+h, q+2h, ... (the 1A variant flips the pairs q,q+1 then q+h,q+1+h,
/// ...). h runs from 1 to h_max in steps of h_stride, and the phase q runs
/// from 1 to h (to 1 for h < 3, which would only duplicate other outputs)
/// in steps of q_stride. Keeping h_max at or below n/5 (n/3 for the 1A
/// variant) keeps successive outputs from looking alike.
struct FirstGenParams {
  static constexpr std::uint64_t kUnlimited =
      std::numeric_limits<std::uint64_t>::max();

  enum class Variant { Basic, Augmented1A };

  int h_max = 1;
  std::uint64_t max_solutions = kUnlimited;
  int q_stride = 1;
  int h_stride = 1;
  Variant variant = Variant::Basic;
};

/// First diversification generator. Emits, for every (h, q), the stride
/// solution x' and (for h > 1) its complement x''; exact duplicates are
/// suppressed, and generation stops once max_solutions have been emitted.
/// With unit strides and no cap the output count is about h_max(h_max + 1).
/// Throws std::invalid_argument for h_max outside [1, n-1] or non-positive
/// strides.
BinaryCollection first_generator(const BinaryVector& seed, const FirstGenParams& params);

/// The added-variation variant alone: for h = 3..min(h_max, n-2), flips the
/// adjacent pair at each stride position, plus complements.
BinaryCollection first_generator_1a(const BinaryVector& seed, const FirstGenParams& params);

/// Sequential (max/min) diversification generator. Emits the seed and its
/// complement, then repeatedly halves every block of the current index
/// partition, complementing the seed over the union of first halves (x')
/// and over the union of second halves (x''), until all blocks are
/// singletons. Odd blocks alternate which side receives the larger half so
/// the two sides stay balanced. Produces about 2(1 + log2 n) solutions; for
/// n a power of two, every solution after the first two is at Hamming
/// distance exactly n/2 from all of its predecessors.
BinaryCollection sequential_generator(const BinaryVector& seed);

}  // namespace divgen
