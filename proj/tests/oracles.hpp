#pragma once
// Brute-force references used by the unit and acceptance tests. Nothing here calls the
// algorithms under test.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sumdens/torus_set.hpp"

namespace oracle {

using sumdens::Rational;
using sumdens::TorusSet;

// t ∈ A + B on R/Z, from the pairwise interval sums without any merging.
// n/d in lowest terms; mpq_class does not canonicalize on construction.
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool in_sum(const TorusSet& a, const TorusSet& b, const Rational& t_in) {
  Rational t = t_in - Rational(sumdens::floor(t_in));
  for (const auto& i : a.intervals()) {
    for (const auto& j : b.intervals()) {
      Rational lo = i.lo + j.lo, hi = i.hi + j.hi;
      for (int shift = 0; shift <= 2; ++shift) {
        Rational u = t + shift;
        if (lo <= u && u <= hi) return true;
      }
    }
  }
  return false;
}

inline bool in_set(const TorusSet& a, const Rational& t) {
  for (const auto& i : a.intervals()) {
    if (i.lo <= t && t <= i.hi) return true;
  }
  return false;
}

inline long lcm_of_denominators(const std::vector<const TorusSet*>& sets) {
  long l = 1;
  for (const auto* s : sets) {
    for (const auto& iv : s->intervals()) {
      l = std::lcm(l, iv.lo.get_den().get_si());
      l = std::lcm(l, iv.hi.get_den().get_si());
    }
  }
  return l;
}

// Measure of A + B when every endpoint lies on (1/m)Z: count the cell midpoints covered.
inline Rational sum_measure_on_grid(const TorusSet& a, const TorusSet& b, long m) {
  long hits = 0;
  for (long i = 0; i < m; ++i) {
    if (in_sum(a, b, frac(2 * i + 1, 2 * m))) ++hits;
  }
  return frac(hits, m);
}

// Random union of at most `max_parts` intervals with endpoints on (1/den)Z.
inline TorusSet random_union(std::mt19937_64& rng, int max_parts, long den) {
  std::uniform_int_distribution<int> parts(1, max_parts);
  std::uniform_int_distribution<long> point(0, den - 1);
  std::uniform_int_distribution<long> len(1, std::max<long>(1, den / (2 * max_parts)));
  sumdens::RawIntervalList raw;
  int n = parts(rng);
  for (int i = 0; i < n; ++i) {
    long lo = point(rng);
    raw.push_back({frac(lo, den), frac(lo + len(rng), den)});
  }
  return TorusSet::normalize(raw);
}

// {a + b : a ∈ A, b ∈ B, a + b < horizon}
inline std::set<std::uint64_t> pair_sums(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                         std::uint64_t horizon) {
  std::set<std::uint64_t> out;
  for (auto x : a) {
    for (auto y : b) {
      if (x + y < horizon) out.insert(x + y);
    }
  }
  return out;
}

// For every modulus g <= gmax and every size s, the largest |R| over R ⊆ Z/gZ with 0 ∈ R and
// |R + R| = s, found by exhaustive search over bitmasks. best[g][s] = {|R|, mask}, |R| = 0 if
// no such R exists.
struct PeriodicTable {
  int gmax = 0;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> best;

  explicit PeriodicTable(int gmax_) : gmax(gmax_), best(gmax_ + 1) {
    for (int g = 1; g <= gmax; ++g) {
      best[g].assign(g + 1, {0, 0});
      const std::uint32_t full = g == 32 ? ~0U : ((1U << g) - 1);
      for (std::uint32_t rest = 0; rest < (1U << (g - 1)); ++rest) {
        std::uint32_t mask = (rest << 1) | 1U;
        std::uint32_t two = 0;
        for (int i = 0; i < g; ++i) {
          if ((mask >> i) & 1U) two |= ((mask << i) | (mask >> (g - i))) & full;
        }
        int s = __builtin_popcount(two), r = __builtin_popcount(mask);
        if (r > best[g][s].first) best[g][s] = {r, mask};
      }
    }
  }

  // (α, β) with β < 2α is reachable by R + gN structures (B a random subset of density
  // γ <= 1 scales α down freely while keeping 2A) iff some g has |2R| = βg and α <= |R|/g.
  bool feasible(const Rational& alpha, const Rational& beta) const {
    for (int g = 1; g <= gmax; ++g) {
      Rational s = beta * g;
      if (s.get_den() != 1) continue;
      long si = s.get_num().get_si();
      if (si < 1 || si > g) continue;
      if (best[g][si].first > 0 && alpha <= Rational(best[g][si].first, g)) return true;
    }
    return false;
  }
};

}  // namespace oracle
