#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sumdens/rational.hpp"
#include "sumdens/torus_set.hpp"

namespace sumdens {

// A ∩ [0, N) for a set A of nonnegative integers, as a bit vector.
class FiniteIntegerSet {
 public:
  explicit FiniteIntegerSet(std::uint64_t horizon = 1);
  static FiniteIntegerSet from_members(std::uint64_t horizon, std::span<const std::uint64_t> members);
  static FiniteIntegerSet from_words(std::uint64_t horizon, std::vector<std::uint64_t> words);
  // [lo, hi) ∩ [0, horizon)
  static FiniteIntegerSet range(std::uint64_t horizon, std::uint64_t lo, std::uint64_t hi);

  std::uint64_t horizon() const { return horizon_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool contains(std::uint64_t n) const {
    return n < horizon_ && ((words_[n / 64] >> (n % 64)) & 1U) != 0;
  }
  // Ignores members outside the horizon.
  void insert(std::uint64_t n) {
    if (n < horizon_) words_[n / 64] |= std::uint64_t{1} << (n % 64);
  }

  std::uint64_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<std::uint64_t> members() const;
  // Smallest member; horizon() when empty.
  std::uint64_t min_member() const;

  // A(t) = |A ∩ [1, t]| for t < horizon.
  std::uint64_t counting(std::uint64_t t) const;
  // |A ∩ [lo, hi)|
  std::uint64_t count_in(std::uint64_t lo, std::uint64_t hi) const;

  FiniteIntegerSet intersect(const FiniteIntegerSet& other) const;
  FiniteIntegerSet unite(const FiniteIntegerSet& other) const;

  bool operator==(const FiniteIntegerSet&) const = default;

 private:
  std::uint64_t horizon_;
  std::vector<std::uint64_t> words_;
};

enum class KernelMode { Serial, Parallel };

// (A + B) ∩ [0, N). Requires equal horizons.
FiniteIntegerSet sumset(const FiniteIntegerSet& a, const FiniteIntegerSet& b,
                        KernelMode mode = KernelMode::Parallel);
FiniteIntegerSet iterated_sumset(const FiniteIntegerSet& a, int k,
                                 KernelMode mode = KernelMode::Parallel);

// |A ∩ [n0, n1)| / (n1 - n0), with 0 <= n0 < n1 <= N.
Rational tail_density(const FiniteIntegerSet& a, std::uint64_t n0, std::uint64_t n1);
double tail_density_double(const FiniteIntegerSet& a, std::uint64_t n0, std::uint64_t n1);

// Number of k-element subsets {u_1 < ... < u_k} of A with sum n; n < horizon.
std::uint64_t representation_count(const FiniteIntegerSet& a, int k, std::uint64_t n);

}  // namespace sumdens
