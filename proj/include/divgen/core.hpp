#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace divgen {

/// Raised when a file cannot be opened, read or written.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input file is readable but malformed. The message names
/// the offending line and column ("seed.csv:3:2: ...").
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Deterministic randomness
// ---------------------------------------------------------------------------

/// Seedable random source used everywhere randomness is called for.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, and doubles are derived from the top 53 bits of each draw, so
/// identical seeds give identical streams on every platform and build.
/// Provenance records name this scheme as "mt19937_64".
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw from [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform draw from [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Unbiased uniform integer from {0, ..., n-1}. Rejection sampling keeps
  /// the result independent of any library distribution implementation.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  int bit() { return static_cast<int>(engine_() >> 63); }

 private:
  std::mt19937_64 engine_;
};

/// Per-trial seed derivation for fan-out workloads: seed_k = base XOR k.
inline std::uint64_t derived_seed(std::uint64_t base, std::uint64_t k) {
  return base ^ k;
}

// ---------------------------------------------------------------------------
// Solution types
//
// All solution types are plain value types, treated as immutable after
// construction: operations take them by const reference and return fresh
// values. Indexing is 0-based in code; every external surface (JSON, CSV,
// validation messages) is 1-based.
// ---------------------------------------------------------------------------

/// Fixed-length vector over {0,1}.
struct BinaryVector {
  std::vector<std::uint8_t> bits;

  BinaryVector() = default;
  explicit BinaryVector(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  std::size_t size() const { return bits.size(); }

  BinaryVector complemented() const;

  /// Complement over a subset of 0-based positions; all other bits copied.
  BinaryVector complemented_over(const std::vector<int>& positions) const;

  bool operator==(const BinaryVector& other) const { return bits == other.bits; }
  bool operator!=(const BinaryVector& other) const { return !(*this == other); }

  static BinaryVector zeros(std::size_t n);
  static BinaryVector ones(std::size_t n);
  static BinaryVector random(std::size_t n, Rng& rng);
};

/// A component range [lower, upper] plus the contraction parameters that
/// define the inner targets L° = L + lambda_lower (U - L) and
/// U° = U - lambda_upper (U - L). Lambdas live in [0, 0.5); the defaults are
/// deliberately asymmetric (0.2 / 0.3) since in practice the lower bound is
/// tight far more often than the upper one.
struct BoundedInterval {
  double lower = 0.0;
  double upper = 1.0;
  double lambda_lower = 0.2;
  double lambda_upper = 0.3;

  BoundedInterval() = default;
  BoundedInterval(double lo, double hi) : lower(lo), upper(hi) {}
  BoundedInterval(double lo, double hi, double ll, double lu)
      : lower(lo), upper(hi), lambda_lower(ll), lambda_upper(lu) {}

  double width() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }
  double contracted_lower() const { return lower + lambda_lower * width(); }
  double contracted_upper() const { return upper - lambda_upper * width(); }
  double contracted_midpoint() const {
    return 0.5 * (contracted_lower() + contracted_upper());
  }

  BoundedInterval with_lambdas(double ll, double lu) const {
    return {lower, upper, ll, lu};
  }

  bool operator==(const BoundedInterval& o) const {
    return lower == o.lower && upper == o.upper &&
           lambda_lower == o.lambda_lower && lambda_upper == o.lambda_upper;
  }
};

/// Real- or integer-valued vector with per-component bounds.
/// `integral` is either empty (all components continuous) or one flag per
/// component.
struct BoundedVector {
  std::vector<double> values;
  std::vector<BoundedInterval> intervals;
  std::vector<std::uint8_t> integral;

  BoundedVector() = default;
  BoundedVector(std::vector<double> v, std::vector<BoundedInterval> iv,
                std::vector<std::uint8_t> integ = {})
      : values(std::move(v)), intervals(std::move(iv)), integral(std::move(integ)) {}

  std::size_t size() const { return values.size(); }
  bool is_integral(std::size_t j) const {
    return !integral.empty() && integral[j] != 0;
  }

  bool operator==(const BoundedVector& o) const {
    return values == o.values && intervals == o.intervals && integral == o.integral;
  }
  bool operator!=(const BoundedVector& o) const { return !(*this == o); }

  /// Same bounds and integrality everywhere, common use in tests and CLI.
  static BoundedVector uniform_bounds(std::vector<double> values,
                                      BoundedInterval interval,
                                      bool integral_components = false);
};

/// Bijective arrangement of the labels {1, ..., n}.
struct Permutation {
  std::vector<int> order;

  Permutation() = default;
  explicit Permutation(std::vector<int> o) : order(std::move(o)) {}

  std::size_t size() const { return order.size(); }
  Permutation reversed() const;

  bool operator==(const Permutation& o) const { return order == o.order; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  static Permutation identity(std::size_t n);
};

// ---------------------------------------------------------------------------
// Collections
// ---------------------------------------------------------------------------

/// Record of how a collection was produced. Re-running the named generator
/// with the recorded parameters (and seed, when randomness was involved)
/// reproduces the members in order.
struct Provenance {
  std::string generator;
  std::map<std::string, std::string> params;
  std::optional<std::uint64_t> rng_seed;
  std::string rng_algorithm;  // set iff rng_seed is
};

/// Ordered, homogeneous set of generated solutions plus its provenance.
template <typename T>
struct Collection {
  std::vector<T> members;
  Provenance provenance;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

using BinaryCollection = Collection<BinaryVector>;
using BoundedCollection = Collection<BoundedVector>;
using PermutationCollection = Collection<Permutation>;

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Report-style validation result: empty issue list means pass. Issue
/// messages reference components with 1-based indices.
struct ValidationReport {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
  std::string joined() const;
};

ValidationReport validate(const BinaryVector& x);
ValidationReport validate(const BoundedVector& x);
ValidationReport validate(const Permutation& p);

/// Nearest integer to `raw` within the integer range of `interval`,
/// half-way cases rounded away from `anchor` (away from zero when
/// raw == anchor). Throws std::invalid_argument when the interval contains
/// no integer.
double nearest_feasible_integer(double raw, double anchor, const BoundedInterval& interval);

/// Throws std::invalid_argument with the joined issue list on failure.
template <typename T>
void require_valid(const T& x, const char* what) {
  ValidationReport r = validate(x);
  if (!r.ok()) {
    throw std::invalid_argument(std::string(what) + ": " + r.joined());
  }
}

}  // namespace divgen
