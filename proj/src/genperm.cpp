#include "divgen/genperm.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace divgen {

namespace {

std::string order_to_string(const std::vector<int>& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(order[i]);
  }
  return s;
}

void check_h(int h, std::size_t n) {
  if (h < 1 || static_cast<std::size_t>(h) > n) {
    throw std::invalid_argument("h = " + std::to_string(h) + " outside [1, n]");
  }
}

}  // namespace

std::vector<int> PermGenParams::sqrt_h_values(std::size_t n) {
  const double root = std::sqrt(static_cast<double>(n));
  const int lo = std::max(1, static_cast<int>(std::floor(root)));
  const int hi = std::min(static_cast<int>(n), static_cast<int>(std::ceil(root)));
  if (lo == hi) return {lo};
  return {lo, hi};
}

std::vector<int> subsequence(const Permutation& p, int h, int s) {
  const std::size_t n = p.size();
  check_h(h, n);
  if (s < 1 || s > h) {
    throw std::invalid_argument("s = " + std::to_string(s) + " outside [1, h]");
  }
  std::vector<int> out;
  for (std::size_t pos = static_cast<std::size_t>(s); pos <= n; pos += h) {
    out.push_back(p.order[pos - 1]);
  }
  return out;
}

Permutation stride_permutation(const Permutation& p, int h) {
  const std::size_t n = p.size();
  check_h(h, n);
  Permutation out;
  out.order.reserve(n);
  for (int s = h; s >= 1; --s) {
    for (std::size_t pos = static_cast<std::size_t>(s); pos <= n; pos += h) {
      out.order.push_back(p.order[pos - 1]);
    }
  }
  return out;
}

PermutationCollection generate_perm(const Permutation& p, const PermGenParams& params) {
  require_valid(p, "generate_perm seed");
  const std::size_t n = p.size();

  std::vector<int> h_values = params.h_values;
  if (h_values.empty()) {
    for (int h = 1; h <= static_cast<int>(n / 2); ++h) h_values.push_back(h);
  }
  for (int h : h_values) check_h(h, n);

  PermutationCollection c;
  std::set<std::vector<int>> seen;
  auto emit = [&](Permutation q) {
    if (seen.insert(q.order).second) c.members.push_back(std::move(q));
  };

  for (int h : h_values) {
    if (h == 1) {
      // P(1) is the seed; only its reversal is of interest.
      if (params.include_reversals) emit(p.reversed());
      continue;
    }
    Permutation ph = stride_permutation(p, h);
    if (params.include_reversals) {
      Permutation rev = ph.reversed();
      emit(std::move(ph));
      emit(std::move(rev));
    } else {
      emit(std::move(ph));
    }
  }

  c.provenance.generator = "perm";
  c.provenance.params["n"] = std::to_string(n);
  c.provenance.params["seed"] = order_to_string(p.order);
  c.provenance.params["h_values"] = order_to_string(h_values);
  c.provenance.params["include_reversals"] = params.include_reversals ? "true" : "false";
  return c;
}

}  // namespace divgen
