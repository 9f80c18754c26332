#include "divgen/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace divgen {

BinaryVector BinaryVector::complemented() const {
  BinaryVector out;
  out.bits.reserve(bits.size());
  for (std::uint8_t b : bits) out.bits.push_back(b ? 0 : 1);
  return out;
}

BinaryVector BinaryVector::complemented_over(const std::vector<int>& positions) const {
  BinaryVector out = *this;
  for (int j : positions) {
    out.bits[static_cast<std::size_t>(j)] ^= 1;
  }
  return out;
}

BinaryVector BinaryVector::zeros(std::size_t n) {
  return BinaryVector(std::vector<std::uint8_t>(n, 0));
}

BinaryVector BinaryVector::ones(std::size_t n) {
  return BinaryVector(std::vector<std::uint8_t>(n, 1));
}

BinaryVector BinaryVector::random(std::size_t n, Rng& rng) {
  BinaryVector out;
  out.bits.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.bits.push_back(static_cast<std::uint8_t>(rng.bit()));
  return out;
}

BoundedVector BoundedVector::uniform_bounds(std::vector<double> values,
                                            BoundedInterval interval,
                                            bool integral_components) {
  BoundedVector out;
  const std::size_t n = values.size();
  out.values = std::move(values);
  out.intervals.assign(n, interval);
  if (integral_components) out.integral.assign(n, 1);
  return out;
}

Permutation Permutation::reversed() const {
  Permutation out = *this;
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.order.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) p.order.push_back(static_cast<int>(i));
  return p;
}

double nearest_feasible_integer(double raw, double anchor, const BoundedInterval& interval) {
  const double lo = std::ceil(interval.lower);
  const double hi = std::floor(interval.upper);
  if (lo > hi) {
    throw std::invalid_argument("interval contains no integer");
  }
  const double fl = std::floor(raw);
  const double ce = std::ceil(raw);
  double v;
  if (raw - fl < ce - raw) {
    v = fl;
  } else if (ce - raw < raw - fl) {
    v = ce;
  } else if (raw > anchor) {
    v = ce;
  } else if (raw < anchor) {
    v = fl;
  } else {
    v = std::round(raw);
  }
  return std::clamp(v, lo, hi);
}

std::string ValidationReport::joined() const {
  std::string out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) out += "; ";
    out += issues[i];
  }
  return out;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void check_interval(const BoundedInterval& iv, std::size_t j1, ValidationReport& r) {
  const std::string tag = "interval " + std::to_string(j1);
  if (!(iv.lower <= iv.upper)) {
    r.issues.push_back(tag + ": L = " + fmt(iv.lower) + " exceeds U = " + fmt(iv.upper));
  }
  for (auto [lam, name] : {std::pair{iv.lambda_lower, "lambda_L"},
                           std::pair{iv.lambda_upper, "lambda_U"}}) {
    if (!(lam >= 0.0 && lam < 0.5) || !std::isfinite(lam)) {
      r.issues.push_back(tag + ": " + name + " = " + fmt(lam) + " outside [0, 0.5)");
    }
  }
}

}  // namespace

ValidationReport validate(const BinaryVector& x) {
  ValidationReport r;
  if (x.size() == 0) r.issues.push_back("length must be >= 1");
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x.bits[j] > 1) {
      r.issues.push_back("x_" + std::to_string(j + 1) + " = " +
                         std::to_string(int(x.bits[j])) + " is not 0/1");
    }
  }
  return r;
}

ValidationReport validate(const BoundedVector& x) {
  ValidationReport r;
  const std::size_t n = x.size();
  if (n == 0) r.issues.push_back("length must be >= 1");
  if (x.intervals.size() != n) {
    r.issues.push_back("values/intervals length mismatch (" + std::to_string(n) +
                       " vs " + std::to_string(x.intervals.size()) + ")");
    return r;
  }
  if (!x.integral.empty() && x.integral.size() != n) {
    r.issues.push_back("integral flag count " + std::to_string(x.integral.size()) +
                       " does not match length " + std::to_string(n));
    return r;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& iv = x.intervals[j];
    check_interval(iv, j + 1, r);
    const double v = x.values[j];
    const std::string xj = "x_" + std::to_string(j + 1);
    if (!std::isfinite(v)) {
      r.issues.push_back(xj + " is not finite");
      continue;
    }
    if (v < iv.lower) r.issues.push_back(xj + " = " + fmt(v) + " below lower bound " + fmt(iv.lower));
    if (v > iv.upper) r.issues.push_back(xj + " = " + fmt(v) + " exceeds upper bound " + fmt(iv.upper));
    if (x.is_integral(j) && std::nearbyint(v) != v) {
      r.issues.push_back(xj + " = " + fmt(v) + " must be an integer");
    }
  }
  return r;
}

ValidationReport validate(const Permutation& p) {
  ValidationReport r;
  const std::size_t n = p.size();
  if (n == 0) {
    r.issues.push_back("length must be >= 1");
    return r;
  }
  std::vector<std::size_t> seen_at(n + 1, 0);  // label -> first 1-based position
  for (std::size_t i = 0; i < n; ++i) {
    const int label = p.order[i];
    if (label < 1 || static_cast<std::size_t>(label) > n) {
      r.issues.push_back("position " + std::to_string(i + 1) + ": label " +
                         std::to_string(label) + " outside 1.." + std::to_string(n));
      continue;
    }
    if (seen_at[label]) {
      r.issues.push_back("not a bijection: label " + std::to_string(label) +
                         " repeated at positions " + std::to_string(seen_at[label]) +
                         " and " + std::to_string(i + 1));
    } else {
      seen_at[label] = i + 1;
    }
  }
  return r;
}

}  // namespace divgen
