#include "divgen/diversity.hpp"

#include <cmath>

namespace divgen {

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::Hamming: return "hamming";
    case Metric::WeightedL1: return "weighted-l1";
    case Metric::Euclidean: return "euclidean";
  }
  return "hamming";
}

Metric metric_from_name(const std::string& name) {
  if (name == "hamming") return Metric::Hamming;
  if (name == "weighted-l1" || name == "l1") return Metric::WeightedL1;
  if (name == "euclidean") return Metric::Euclidean;
  throw std::invalid_argument("unknown metric '" + name + "'");
}

namespace {

std::size_t disagreements(const std::vector<std::uint8_t>& a,
                          const std::vector<std::uint8_t>& b) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < a.size(); ++j) count += a[j] != b[j];
  return count;
}

}  // namespace

double distance(const BinaryVector& a, const BinaryVector& b, Metric metric) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  const double h = static_cast<double>(disagreements(a.bits, b.bits));
  return metric == Metric::Euclidean ? std::sqrt(h) : h;
}

double distance(const Permutation& a, const Permutation& b, Metric metric) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  if (metric != Metric::Hamming) {
    throw std::invalid_argument("permutation distance supports hamming only");
  }
  std::size_t count = 0;
  for (std::size_t j = 0; j < a.size(); ++j) count += a.order[j] != b.order[j];
  return static_cast<double>(count);
}

double distance(const BoundedVector& a, const BoundedVector& b, Metric metric,
                const std::vector<double>& weights) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  if (!weights.empty() && weights.size() != a.size()) {
    throw std::invalid_argument("distance: weight count mismatch");
  }
  double sum = 0.0;
  switch (metric) {
    case Metric::Hamming:
      for (std::size_t j = 0; j < a.size(); ++j) sum += a.values[j] != b.values[j];
      return sum;
    case Metric::WeightedL1:
      for (std::size_t j = 0; j < a.size(); ++j) {
        const double w = weights.empty() ? 1.0 : weights[j];
        sum += w * std::abs(a.values[j] - b.values[j]);
      }
      return sum;
    case Metric::Euclidean:
      for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a.values[j] - b.values[j];
        sum += d * d;
      }
      return std::sqrt(sum);
  }
  return sum;
}

}  // namespace divgen
