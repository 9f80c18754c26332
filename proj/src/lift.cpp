#include "divgen/lift.hpp"

#include <string>

namespace divgen {

namespace {

void check_policy(const LiftPolicy& policy) {
  if (policy.midpoint_bit != 0 && policy.midpoint_bit != 1) {
    throw std::invalid_argument("midpoint_bit must be 0 or 1");
  }
}

std::string lambda_csv(const std::vector<std::pair<double, double>>& lambdas, bool lower) {
  std::string s;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (j) s.push_back(',');
    s += std::to_string(lower ? lambdas[j].first : lambdas[j].second);
  }
  return s;
}

}  // namespace

BinaryVector binarize_seed(const BoundedVector& seed, const LiftPolicy& policy) {
  check_policy(policy);
  require_valid(seed, "binarize_seed");
  BinaryVector y;
  y.bits.reserve(seed.size());
  for (std::size_t j = 0; j < seed.size(); ++j) {
    const double mid = seed.intervals[j].midpoint();
    const double x = seed.values[j];
    std::uint8_t bit;
    if (x < mid) {
      bit = 0;
    } else if (x > mid) {
      bit = 1;
    } else {
      bit = static_cast<std::uint8_t>(policy.midpoint_bit);
    }
    y.bits.push_back(bit);
  }
  return y;
}

BoundedCollection lift_collection(const BoundedVector& seed,
                                  const BinaryCollection& binary_collection,
                                  const LiftPolicy& policy) {
  check_policy(policy);
  require_valid(seed, "lift_collection seed");
  const std::size_t n = seed.size();
  for (const auto& y : binary_collection.members) {
    if (y.size() != n) {
      throw std::invalid_argument("lift_collection: binary member dimension " +
                                  std::to_string(y.size()) + " does not match seed " +
                                  std::to_string(n));
    }
  }

  const BinaryVector y_seed = binarize_seed(seed, policy);
  // One lambda draw per call, shared by all members, so the collection's
  // contracted targets are mutually comparable.
  const auto lambdas = policy.lambda.resolve(seed.intervals);

  std::vector<BoundedInterval> intervals;
  intervals.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    intervals.push_back(seed.intervals[j].with_lambdas(lambdas[j].first, lambdas[j].second));
  }

  BoundedCollection out;
  out.members.push_back(BoundedVector{seed.values, intervals, seed.integral});

  for (const auto& y : binary_collection.members) {
    BoundedVector x;
    x.intervals = intervals;
    x.integral = seed.integral;
    x.values.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      double v;
      if (policy.rule == LiftPolicy::Rule::R2 && y.bits[j] == y_seed.bits[j]) {
        v = seed.values[j];
      } else {
        v = y.bits[j] ? intervals[j].contracted_upper() : intervals[j].contracted_lower();
        if (seed.is_integral(j)) {
          v = nearest_feasible_integer(v, seed.values[j], intervals[j]);
        }
      }
      x.values.push_back(v);
    }
    out.members.push_back(std::move(x));
  }

  out.provenance.generator = "lift";
  out.provenance.params["rule"] = policy.rule == LiftPolicy::Rule::R1 ? "r1" : "r2";
  out.provenance.params["midpoint_bit"] = std::to_string(policy.midpoint_bit);
  out.provenance.params["binary.generator"] = binary_collection.provenance.generator;
  for (const auto& [key, value] : binary_collection.provenance.params) {
    out.provenance.params["binary." + key] = value;
  }
  switch (policy.lambda.kind) {
    case LambdaPolicy::Kind::FromIntervals:
      out.provenance.params["lambda_policy"] = "from-intervals";
      break;
    case LambdaPolicy::Kind::Fixed:
      out.provenance.params["lambda_policy"] = "fixed";
      out.provenance.params["lambda_lower"] = std::to_string(policy.lambda.fixed_lower);
      out.provenance.params["lambda_upper"] = std::to_string(policy.lambda.fixed_upper);
      break;
    case LambdaPolicy::Kind::PerComponentRandom:
      out.provenance.params["lambda_policy"] = "per-component-random";
      out.provenance.params["lambda_draws_lower"] = lambda_csv(lambdas, true);
      out.provenance.params["lambda_draws_upper"] = lambda_csv(lambdas, false);
      out.provenance.rng_seed = policy.lambda.rng_seed;
      out.provenance.rng_algorithm = Rng::kAlgorithm;
      break;
  }
  return out;
}

}  // namespace divgen
