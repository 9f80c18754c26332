#include "divgen/project.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace divgen {

namespace {

constexpr double kMinMagnitude = 1e-6;

void check_linear_form(const ProximityObjective& obj) {
  if (obj.sense != ProximityObjective::Sense::MaximizeLinear) {
    throw std::invalid_argument("projection needs the linear (maximize) objective form");
  }
}

// Block indices ordered by decreasing coefficient, lowest index first among
// equals; the deterministic tie rule every projection shares.
std::vector<int> ranked(const std::vector<int>& block, const std::vector<double>& f) {
  std::vector<int> idx = block;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (f[a] != f[b]) return f[a] > f[b];
    return a < b;
  });
  return idx;
}

}  // namespace

void FrequencyMemory::record(const BinaryVector& anchor, const BinaryVector& solution) {
  if (anchor.size() != solution.size()) {
    throw std::invalid_argument("FrequencyMemory::record: dimension mismatch");
  }
  if (counts.empty()) counts.assign(anchor.size(), 0);
  if (counts.size() != anchor.size()) {
    throw std::invalid_argument("FrequencyMemory::record: count vector dimension mismatch");
  }
  for (std::size_t j = 0; j < anchor.size(); ++j) {
    if (anchor.bits[j] == solution.bits[j]) ++counts[j];
  }
  ++total;
}

std::size_t ConstraintSystem::dimension() const {
  if (kind == Kind::Box) return box_bounds.size();
  std::size_t n = 0;
  for (const auto& block : blocks) n += block.size();
  return n;
}

ConstraintSystem ConstraintSystem::gub(std::vector<std::vector<int>> blocks) {
  ConstraintSystem cs;
  cs.kind = Kind::Gub;
  cs.blocks = std::move(blocks);
  cs.rhs.assign(cs.blocks.size(), 1);
  return cs;
}

ConstraintSystem ConstraintSystem::generalized_multichoice(
    std::vector<std::vector<int>> blocks, std::vector<int> rhs) {
  ConstraintSystem cs;
  cs.kind = Kind::GeneralizedMultipleChoice;
  cs.blocks = std::move(blocks);
  cs.rhs = std::move(rhs);
  return cs;
}

ConstraintSystem ConstraintSystem::cardinality(int n, int m1) {
  ConstraintSystem cs;
  cs.kind = Kind::Cardinality;
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  cs.blocks.push_back(std::move(all));
  cs.rhs.push_back(m1);
  return cs;
}

ConstraintSystem ConstraintSystem::box(std::vector<BoundedInterval> bounds) {
  ConstraintSystem cs;
  cs.kind = Kind::Box;
  cs.box_bounds = std::move(bounds);
  return cs;
}

void ConstraintSystem::check(std::size_t n) const {
  if (kind == Kind::Box) {
    if (box_bounds.size() != n) {
      throw std::invalid_argument("box bounds count does not match dimension");
    }
    return;
  }
  if (blocks.size() != rhs.size()) {
    throw std::invalid_argument("blocks/rhs count mismatch");
  }
  if (kind == Kind::Cardinality && blocks.size() != 1) {
    throw std::invalid_argument("cardinality system must have a single block");
  }
  std::vector<std::uint8_t> covered(n, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& block = blocks[i];
    if (block.empty()) {
      throw std::invalid_argument("block " + std::to_string(i + 1) + " is empty");
    }
    for (int j : block) {
      if (j < 0 || static_cast<std::size_t>(j) >= n) {
        throw std::invalid_argument("block " + std::to_string(i + 1) +
                                    " references component " + std::to_string(j + 1) +
                                    " outside 1.." + std::to_string(n));
      }
      if (covered[static_cast<std::size_t>(j)]) {
        throw std::invalid_argument("component " + std::to_string(j + 1) +
                                    " appears in more than one block");
      }
      covered[static_cast<std::size_t>(j)] = 1;
    }
    const int m = rhs[i];
    const int cap = static_cast<int>(block.size());
    if (kind == Kind::Gub) {
      if (m != 1) throw std::invalid_argument("GUB right-hand sides must equal 1");
    } else if (m <= 0 || m >= cap) {
      throw std::invalid_argument("rhs " + std::to_string(m) + " for block " +
                                  std::to_string(i + 1) + " outside (0, " +
                                  std::to_string(cap) + ")");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!covered[j]) {
      throw std::invalid_argument("component " + std::to_string(j + 1) +
                                  " not covered by any block");
    }
  }
}

bool ConstraintSystem::satisfied_by(const BinaryVector& x) const {
  if (kind == Kind::Box) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    int sum = 0;
    for (int j : blocks[i]) sum += x.bits[static_cast<std::size_t>(j)];
    if (sum != rhs[i]) return false;
  }
  return true;
}

ProximityObjective build_coefficients(const BinaryVector& anchor) {
  require_valid(anchor, "build_coefficients anchor");
  ProximityObjective obj;
  obj.sense = ProximityObjective::Sense::MaximizeLinear;
  obj.coefficients.reserve(anchor.size());
  obj.anchor.reserve(anchor.size());
  for (std::uint8_t b : anchor.bits) {
    obj.coefficients.push_back(b ? 1.0 : -1.0);
    obj.anchor.push_back(static_cast<double>(b));
  }
  return obj;
}

ProximityObjective build_coefficients(const BinaryVector& anchor,
                                      const FrequencyMemory& memory, double beta,
                                      Rng* jitter) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be >= 0");
  }
  if (memory.total < 1) {
    throw std::invalid_argument("frequency memory has no recordings");
  }
  if (memory.counts.size() != anchor.size()) {
    throw std::invalid_argument("frequency memory dimension mismatch");
  }
  ProximityObjective obj = build_coefficients(anchor);
  for (std::size_t j = 0; j < anchor.size(); ++j) {
    if (memory.counts[j] > memory.total) {
      throw std::invalid_argument("count " + std::to_string(j + 1) + " exceeds total");
    }
    double magnitude =
        1.0 + beta * static_cast<double>(memory.counts[j]) / static_cast<double>(memory.total);
    if (jitter != nullptr) {
      magnitude += beta * (jitter->uniform01() - 0.5);
    }
    obj.coefficients[j] *= std::max(magnitude, kMinMagnitude);
  }
  return obj;
}

ProximityObjective l1_objective(const BoundedVector& anchor, std::vector<double> weights) {
  if (weights.empty()) {
    weights.assign(anchor.size(), 1.0);
  } else if (weights.size() != anchor.size()) {
    throw std::invalid_argument("weight count does not match anchor dimension");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("L1 weights must be positive");
  }
  ProximityObjective obj;
  obj.sense = ProximityObjective::Sense::MinimizeWeightedL1;
  obj.coefficients = std::move(weights);
  obj.anchor = anchor.values;
  return obj;
}

double evaluate_proximity(const ProximityObjective& obj, const std::vector<double>& x) {
  if (x.size() != obj.coefficients.size()) {
    throw std::invalid_argument("evaluate_proximity: dimension mismatch");
  }
  double sum = 0.0;
  if (obj.sense == ProximityObjective::Sense::MaximizeLinear) {
    for (std::size_t j = 0; j < x.size(); ++j) sum += obj.coefficients[j] * x[j];
  } else {
    if (obj.anchor.size() != x.size()) {
      throw std::invalid_argument("evaluate_proximity: anchor dimension mismatch");
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
      sum += obj.coefficients[j] * std::abs(x[j] - obj.anchor[j]);
    }
  }
  return sum;
}

double evaluate_proximity(const ProximityObjective& obj, const BinaryVector& x) {
  std::vector<double> v(x.bits.begin(), x.bits.end());
  return evaluate_proximity(obj, v);
}

double evaluate_proximity(const ProximityObjective& obj, const BoundedVector& x) {
  return evaluate_proximity(obj, x.values);
}

BinaryVector project_gub(const ProximityObjective& obj, const ConstraintSystem& cs) {
  check_linear_form(obj);
  if (cs.kind != ConstraintSystem::Kind::Gub) {
    throw std::invalid_argument("project_gub requires a GUB system");
  }
  cs.check(obj.size());
  BinaryVector x = BinaryVector::zeros(obj.size());
  for (const auto& block : cs.blocks) {
    int best = block.front();
    for (int j : block) {
      if (obj.coefficients[j] > obj.coefficients[best] ||
          (obj.coefficients[j] == obj.coefficients[best] && j < best)) {
        best = j;
      }
    }
    x.bits[static_cast<std::size_t>(best)] = 1;
  }
  return x;
}

BinaryVector project_generalized_multichoice(const ProximityObjective& obj,
                                             const ConstraintSystem& cs) {
  check_linear_form(obj);
  if (cs.kind != ConstraintSystem::Kind::GeneralizedMultipleChoice &&
      cs.kind != ConstraintSystem::Kind::Cardinality) {
    throw std::invalid_argument(
        "project_generalized_multichoice requires a generalized multiple choice or "
        "cardinality system");
  }
  cs.check(obj.size());
  BinaryVector x = BinaryVector::zeros(obj.size());
  for (std::size_t i = 0; i < cs.blocks.size(); ++i) {
    const std::vector<int> order = ranked(cs.blocks[i], obj.coefficients);
    for (int k = 0; k < cs.rhs[i]; ++k) {
      x.bits[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = 1;
    }
  }
  return x;
}

BinaryVector project_cardinality(const ProximityObjective& obj, int m1, int n) {
  if (static_cast<std::size_t>(n) != obj.size()) {
    throw std::invalid_argument("project_cardinality: n does not match objective");
  }
  return project_generalized_multichoice(obj, ConstraintSystem::cardinality(n, m1));
}

BoundedVector project_box(const BoundedVector& anchor,
                          const std::vector<BoundedInterval>& bounds) {
  if (bounds.size() != anchor.size()) {
    throw std::invalid_argument("project_box: bounds count does not match anchor");
  }
  BoundedVector out;
  out.values.reserve(anchor.size());
  out.intervals = bounds;
  out.integral = anchor.integral;
  for (std::size_t j = 0; j < anchor.size(); ++j) {
    double v = std::clamp(anchor.values[j], bounds[j].lower, bounds[j].upper);
    if (anchor.is_integral(j)) {
      v = nearest_feasible_integer(v, v, bounds[j]);
    }
    out.values.push_back(v);
  }
  return out;
}

}  // namespace divgen
