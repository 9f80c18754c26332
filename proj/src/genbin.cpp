#include "divgen/genbin.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace divgen {

namespace {

std::string bits_to_string(const BinaryVector& x) {
  std::string s;
  s.reserve(x.size());
  for (std::uint8_t b : x.bits) s.push_back(b ? '1' : '0');
  return s;
}

// Collects solutions in emission order, suppressing exact repeats and
// honoring the max_solutions cap after every single emission.
class Emitter {
 public:
  explicit Emitter(std::uint64_t cap) : cap_(cap) {}

  // Returns false once the cap is reached.
  bool emit(const BinaryVector& x) {
    if (full()) return false;
    if (seen_.insert(x.bits).second) {
      members_.push_back(x);
    }
    return !full();
  }

  bool full() const { return members_.size() >= cap_; }
  std::vector<BinaryVector> take() { return std::move(members_); }

 private:
  std::uint64_t cap_;
  std::set<std::vector<std::uint8_t>> seen_;
  std::vector<BinaryVector> members_;
};

void check_params(const BinaryVector& seed, const FirstGenParams& p) {
  require_valid(seed, "first_generator seed");
  const int n = static_cast<int>(seed.size());
  if (p.h_max < 1 || p.h_max >= n) {
    throw std::invalid_argument("h_max must lie in [1, n-1], got " +
                                std::to_string(p.h_max) + " for n = " + std::to_string(n));
  }
  if (p.q_stride < 1 || p.h_stride < 1) {
    throw std::invalid_argument("strides must be >= 1");
  }
  if (p.max_solutions < 1) {
    throw std::invalid_argument("max_solutions must be >= 1");
  }
}

// Type 1 solution for (h, q): complement the seed at 1-based positions
// q + kh, k = 0..floor((n-q)/h). The pseudo-code's inner loop starts at
// k = 1, but the accompanying text and the q-shift example both flip
// position q itself, so k = 0 is included.
void emit_basic(const BinaryVector& seed, const FirstGenParams& p, Emitter& out) {
  const int n = static_cast<int>(seed.size());
  std::vector<int> flips;
  for (int h = 1; h <= p.h_max; h += p.h_stride) {
    const int q_star = (h < 3) ? 1 : h;
    for (int q = 1; q <= q_star; q += p.q_stride) {
      flips.clear();
      for (int pos = q; pos <= n; pos += h) flips.push_back(pos - 1);
      const BinaryVector x_prime = seed.complemented_over(flips);
      if (!out.emit(x_prime)) return;
      // h = 1 is skipped here: its complement is the seed itself.
      if (h > 1 && !out.emit(x_prime.complemented())) return;
    }
  }
}

// Type 1A solution for (h, q): complement the adjacent pair (q, q+1) and
// every pair (q + kh, q+1 + kh) that fits entirely below n.
void emit_1a(const BinaryVector& seed, const FirstGenParams& p, Emitter& out) {
  const int n = static_cast<int>(seed.size());
  const int h_cap = std::min(p.h_max, n - 2);
  std::vector<int> flips;
  for (int h = 3; h <= h_cap; h += p.h_stride) {
    for (int q = 1; q <= h; q += p.q_stride) {
      flips.clear();
      for (int pos = q; pos + 1 <= n; pos += h) {
        flips.push_back(pos - 1);
        flips.push_back(pos);
      }
      if (flips.empty()) continue;
      const BinaryVector x_prime = seed.complemented_over(flips);
      if (!out.emit(x_prime)) return;
      if (!out.emit(x_prime.complemented())) return;
    }
  }
}

Provenance first_provenance(const char* name, const BinaryVector& seed,
                            const FirstGenParams& p) {
  Provenance prov;
  prov.generator = name;
  prov.params["n"] = std::to_string(seed.size());
  prov.params["seed"] = bits_to_string(seed);
  prov.params["h_max"] = std::to_string(p.h_max);
  prov.params["q_stride"] = std::to_string(p.q_stride);
  prov.params["h_stride"] = std::to_string(p.h_stride);
  prov.params["max_solutions"] = p.max_solutions == FirstGenParams::kUnlimited
                                     ? "unlimited"
                                     : std::to_string(p.max_solutions);
  prov.params["variant"] =
      p.variant == FirstGenParams::Variant::Basic ? "basic" : "augmented-1a";
  return prov;
}

}  // namespace

BinaryCollection first_generator(const BinaryVector& seed, const FirstGenParams& params) {
  check_params(seed, params);
  Emitter out(params.max_solutions);
  emit_basic(seed, params, out);
  if (params.variant == FirstGenParams::Variant::Augmented1A && !out.full()) {
    emit_1a(seed, params, out);
  }
  BinaryCollection c;
  c.members = out.take();
  c.provenance = first_provenance("first", seed, params);
  return c;
}

BinaryCollection first_generator_1a(const BinaryVector& seed, const FirstGenParams& params) {
  check_params(seed, params);
  Emitter out(params.max_solutions);
  emit_1a(seed, params, out);
  BinaryCollection c;
  c.members = out.take();
  c.provenance = first_provenance("first-1a", seed, params);
  return c;
}

BinaryCollection sequential_generator(const BinaryVector& seed) {
  require_valid(seed, "sequential_generator seed");
  const int n = static_cast<int>(seed.size());

  Emitter out(FirstGenParams::kUnlimited);
  out.emit(seed);
  out.emit(seed.complemented());

  // Blocks are contiguous index ranges [begin, end); splitting keeps them
  // contiguous, so the partition is just a list of ranges.
  struct Block {
    int begin, end;
    int size() const { return end - begin; }
  };
  std::vector<Block> blocks{{0, n}};
  bool larger_first = true;  // odd-block alternation state

  for (;;) {
    const bool any_splittable =
        std::any_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.size() > 1; });
    if (!any_splittable) break;

    std::vector<int> first_union, second_union;
    std::vector<Block> next;
    for (const Block& b : blocks) {
      int first_size;
      if (b.size() % 2 == 0) {
        first_size = b.size() / 2;
      } else {
        first_size = larger_first ? (b.size() + 1) / 2 : b.size() / 2;
        larger_first = !larger_first;
      }
      const Block first{b.begin, b.begin + first_size};
      const Block second{b.begin + first_size, b.end};
      for (int j = first.begin; j < first.end; ++j) first_union.push_back(j);
      for (int j = second.begin; j < second.end; ++j) second_union.push_back(j);
      if (first.size() > 0) next.push_back(first);
      if (second.size() > 0) next.push_back(second);
    }
    out.emit(seed.complemented_over(first_union));
    out.emit(seed.complemented_over(second_union));
    blocks = std::move(next);
  }

  BinaryCollection c;
  c.members = out.take();
  c.provenance.generator = "sequential";
  c.provenance.params["n"] = std::to_string(n);
  c.provenance.params["seed"] = bits_to_string(seed);
  return c;
}

}  // namespace divgen
