#pragma once

#include <limits>
#include <string>
#include <vector>

#include "divgen/core.hpp"

namespace divgen {

enum class Metric { Hamming, WeightedL1, Euclidean };

std::string metric_name(Metric m);
Metric metric_from_name(const std::string& name);

/// Positionwise disagreement count.
double distance(const BinaryVector& a, const BinaryVector& b, Metric metric = Metric::Hamming);

/// Permutations support Hamming only.
double distance(const Permutation& a, const Permutation& b, Metric metric = Metric::Hamming);

/// Weighted L1 (unit weights unless given), Euclidean, or exact-disagreement
/// Hamming.
double distance(const BoundedVector& a, const BoundedVector& b,
                Metric metric = Metric::WeightedL1,
                const std::vector<double>& weights = {});

template <typename T>
constexpr Metric default_metric() {
  return Metric::Hamming;
}
template <>
constexpr Metric default_metric<BoundedVector>() {
  return Metric::WeightedL1;
}

/// Pairwise and seed-relative dispersion statistics of a collection.
/// min_pairwise and mean_pairwise are +inf when there are fewer than two
/// members; min_to_seed skips members identical to the seed and is +inf
/// when none differ.
struct DiversityReport {
  Metric metric = Metric::Hamming;
  std::size_t member_count = 0;
  double min_pairwise = std::numeric_limits<double>::infinity();
  double mean_pairwise = std::numeric_limits<double>::infinity();
  double min_to_seed = std::numeric_limits<double>::infinity();
};

template <typename T>
DiversityReport report(const Collection<T>& collection, const T& seed,
                       Metric metric = default_metric<T>()) {
  if (collection.empty()) {
    throw std::domain_error("report: empty collection");
  }
  DiversityReport r;
  r.metric = metric;
  r.member_count = collection.size();
  const auto& m = collection.members;
  if (m.size() >= 2) {
    double min = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const double d = distance(m[i], m[j], metric);
        min = std::min(min, d);
        sum += d;
        ++pairs;
      }
    }
    r.min_pairwise = min;
    r.mean_pairwise = sum / static_cast<double>(pairs);
  }
  for (const auto& member : m) {
    if (member == seed) continue;
    r.min_to_seed = std::min(r.min_to_seed, distance(member, seed, metric));
  }
  return r;
}

/// Greedy max-min extraction: start from `start` (the first member by
/// default, which must occur in the population), then repeatedly add the
/// member whose minimum distance to everything already selected is largest,
/// lowest population index on ties. Members appear in selection order.
template <typename T>
Collection<T> extract_diverse_subset(const Collection<T>& population, std::size_t k,
                                     const T* start = nullptr,
                                     Metric metric = default_metric<T>()) {
  const auto& m = population.members;
  if (k < 1 || k > m.size()) {
    throw std::invalid_argument("extract_diverse_subset: k outside [1, population size]");
  }
  std::size_t start_index = 0;
  if (start != nullptr) {
    while (start_index < m.size() && !(m[start_index] == *start)) ++start_index;
    if (start_index == m.size()) {
      throw std::invalid_argument("extract_diverse_subset: start is not a member");
    }
  }

  std::vector<std::uint8_t> selected(m.size(), 0);
  std::vector<double> min_dist(m.size(), std::numeric_limits<double>::infinity());
  Collection<T> out;
  out.provenance.generator = "extract-diverse-subset";
  out.provenance.params["k"] = std::to_string(k);
  out.provenance.params["metric"] = metric_name(metric);
  out.provenance.params["start_index"] = std::to_string(start_index + 1);
  if (!population.provenance.generator.empty()) {
    out.provenance.params["source"] = population.provenance.generator;
  }

  std::size_t current = start_index;
  for (std::size_t picked = 0;;) {
    selected[current] = 1;
    out.members.push_back(m[current]);
    if (++picked == k) break;
    std::size_t best = m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (selected[i]) continue;
      min_dist[i] = std::min(min_dist[i], distance(m[i], m[current], metric));
      if (best == m.size() || min_dist[i] > min_dist[best]) best = i;
    }
    current = best;
  }
  return out;
}

}  // namespace divgen
