#include "divgen/opposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace divgen {

namespace {

void check_lambda(double lam, const char* name) {
  if (!(lam >= 0.0 && lam < 0.5)) {
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(lam) +
                                " outside [0, 0.5)");
  }
}

void check_interval(const BoundedInterval& iv) {
  if (!(iv.lower <= iv.upper)) {
    throw std::invalid_argument("interval has L > U");
  }
  check_lambda(iv.lambda_lower, "lambda_L");
  check_lambda(iv.lambda_upper, "lambda_U");
}

}  // namespace

std::vector<std::pair<double, double>> LambdaPolicy::resolve(
    const std::vector<BoundedInterval>& intervals) const {
  const std::size_t n = intervals.size();
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  switch (kind) {
    case Kind::FromIntervals:
      for (const auto& iv : intervals) out.emplace_back(iv.lambda_lower, iv.lambda_upper);
      break;
    case Kind::Fixed:
      check_lambda(fixed_lower, "lambda_L");
      check_lambda(fixed_upper, "lambda_U");
      out.assign(n, {fixed_lower, fixed_upper});
      break;
    case Kind::PerComponentRandom: {
      for (auto [range, name] : {std::pair{sample_lower, "lambda_L sampling interval"},
                                 std::pair{sample_upper, "lambda_U sampling interval"}}) {
        if (!(range.first >= 0.0 && range.second < 0.5 && range.first <= range.second)) {
          throw std::invalid_argument(std::string(name) + " not contained in [0, 0.5)");
        }
      }
      // Call sequence is fixed (lambda_L then lambda_U, component by
      // component) so a recorded seed replays the exact draws.
      Rng rng(rng_seed);
      for (std::size_t j = 0; j < n; ++j) {
        const double ll = rng.uniform(sample_lower.first, sample_lower.second);
        const double lu = rng.uniform(sample_upper.first, sample_upper.second);
        out.emplace_back(ll, lu);
      }
      break;
    }
  }
  return out;
}

double obl_opposite(double x_prime, const BoundedInterval& interval) {
  if (!(interval.lower <= interval.upper)) {
    throw std::invalid_argument("interval has L > U");
  }
  if (!(x_prime >= interval.lower && x_prime <= interval.upper)) {
    throw std::domain_error("obl_opposite: x' = " + std::to_string(x_prime) +
                            " outside [" + std::to_string(interval.lower) + ", " +
                            std::to_string(interval.upper) + "]");
  }
  return interval.upper + interval.lower - x_prime;
}

std::pair<double, double> dbl_bounds(const BoundedInterval& interval) {
  check_interval(interval);
  return {interval.contracted_lower(), interval.contracted_upper()};
}

double dbl_opposite(double x_prime, const BoundedInterval& interval, bool integral,
                    MidpointTie tie, Rng* tie_rng) {
  if (!std::isfinite(x_prime)) {
    throw std::domain_error("dbl_opposite: x' must be finite");
  }
  const auto [lo, hi] = dbl_bounds(interval);
  const double mid = 0.5 * (lo + hi);
  double raw;
  if (x_prime > mid) {
    raw = lo;
  } else if (x_prime < mid) {
    raw = hi;
  } else {
    switch (tie) {
      case MidpointTie::ChooseUpper: raw = hi; break;
      case MidpointTie::ChooseLower: raw = lo; break;
      case MidpointTie::Random:
        if (tie_rng == nullptr) {
          throw std::invalid_argument("MidpointTie::Random requires an Rng");
        }
        raw = tie_rng->bit() ? hi : lo;
        break;
      default: raw = hi;
    }
  }
  return integral ? nearest_feasible_integer(raw, x_prime, interval) : raw;
}

BoundedVector dbl_opposite_vector(const BoundedVector& x_prime,
                                  const LambdaPolicy& policy, MidpointTie tie,
                                  Rng* tie_rng) {
  if (x_prime.values.size() != x_prime.intervals.size()) {
    throw std::invalid_argument("dbl_opposite_vector: values/intervals mismatch");
  }
  const auto lambdas = policy.resolve(x_prime.intervals);
  BoundedVector out;
  out.values.reserve(x_prime.size());
  out.intervals.reserve(x_prime.size());
  out.integral = x_prime.integral;
  for (std::size_t j = 0; j < x_prime.size(); ++j) {
    const BoundedInterval iv =
        x_prime.intervals[j].with_lambdas(lambdas[j].first, lambdas[j].second);
    out.values.push_back(
        dbl_opposite(x_prime.values[j], iv, x_prime.is_integral(j), tie, tie_rng));
    out.intervals.push_back(iv);
  }
  return out;
}

double maxmin_opposite_component(const SortedColumn& column) {
  const std::size_t r = column.values.size();
  if (r == 0) {
    throw std::domain_error("maxmin_opposite_component: empty column");
  }
  if (!std::is_sorted(column.values.begin(), column.values.end())) {
    throw std::invalid_argument("maxmin_opposite_component: values not sorted");
  }
  if (column.lower_sentinel > column.values.front() ||
      column.upper_sentinel < column.values.back()) {
    throw std::invalid_argument("maxmin_opposite_component: sentinels must bracket the values");
  }

  // Gap h runs between v[h-1] and v[h] with the sentinels at the ends. A
  // sentinel endpoint is at distance g_h from its nearest value, an interior
  // midpoint only at g_h / 2; pick whichever candidate realizes the largest
  // minimum distance, smallest h on ties.
  double best_dist = -1.0;
  double best_value = column.lower_sentinel;
  const std::size_t last = r + 1;
  for (std::size_t h = 1; h <= last; ++h) {
    const double prev = (h == 1) ? column.lower_sentinel : column.values[h - 2];
    const double next = (h == last) ? column.upper_sentinel : column.values[h - 1];
    const double gap = next - prev;
    double dist, value;
    if (h == 1) {
      dist = gap;
      value = column.lower_sentinel;
    } else if (h == last) {
      dist = gap;
      value = column.upper_sentinel;
    } else {
      dist = 0.5 * gap;
      value = 0.5 * (prev + next);
    }
    if (dist > best_dist) {
      best_dist = dist;
      best_value = value;
    }
  }
  return best_value;
}

BoundedVector maxmin_opposite(const BoundedCollection& collection,
                              const std::vector<BoundedInterval>& bounds,
                              bool contracted_sentinels) {
  if (collection.empty()) {
    throw std::domain_error("maxmin_opposite: empty collection");
  }
  const std::size_t n = bounds.size();
  for (const auto& member : collection.members) {
    if (member.size() != n) {
      throw std::invalid_argument("maxmin_opposite: member dimension mismatch");
    }
  }

  BoundedVector out;
  out.values.reserve(n);
  out.intervals = bounds;
  out.integral = collection.members.front().integral;

  SortedColumn column;
  for (std::size_t j = 0; j < n; ++j) {
    check_interval(bounds[j]);
    column.values.clear();
    for (const auto& member : collection.members) {
      const double v = member.values[j];
      if (v < bounds[j].lower || v > bounds[j].upper) {
        throw std::invalid_argument("maxmin_opposite: member value x_" +
                                    std::to_string(j + 1) + " outside bounds");
      }
      column.values.push_back(v);
    }
    std::sort(column.values.begin(), column.values.end());
    if (contracted_sentinels) {
      // L° is meant to lie between L and the smallest value (and U° between
      // the largest value and U); clamp in case the data says otherwise.
      column.lower_sentinel = std::min(bounds[j].contracted_lower(), column.values.front());
      column.upper_sentinel = std::max(bounds[j].contracted_upper(), column.values.back());
    } else {
      column.lower_sentinel = bounds[j].lower;
      column.upper_sentinel = bounds[j].upper;
    }
    double v = maxmin_opposite_component(column);
    if (out.is_integral(j)) {
      v = nearest_feasible_integer(v, v, bounds[j]);
    }
    out.values.push_back(v);
  }
  return out;
}

}  // namespace divgen
