#include "sumdens/integer_set.hpp"

#include <bit>

#include "sumdens/sumset_kernels.hpp"

namespace sumdens {

FiniteIntegerSet::FiniteIntegerSet(std::uint64_t horizon)
    : horizon_(horizon), words_(kernels::words_for(horizon), 0) {
  if (horizon == 0) throw InvalidInput("integer set horizon must be positive");
}

FiniteIntegerSet FiniteIntegerSet::from_members(std::uint64_t horizon,
                                                std::span<const std::uint64_t> members) {
  FiniteIntegerSet s(horizon);
  for (auto m : members) s.insert(m);
  return s;
}

FiniteIntegerSet FiniteIntegerSet::from_words(std::uint64_t horizon, std::vector<std::uint64_t> words) {
  FiniteIntegerSet s(horizon);
  if (words.size() != s.words_.size()) throw InvalidInput("bit vector length does not match horizon");
  s.words_ = std::move(words);
  kernels::mask_tail(s.words_, horizon);
  return s;
}

FiniteIntegerSet FiniteIntegerSet::range(std::uint64_t horizon, std::uint64_t lo, std::uint64_t hi) {
  FiniteIntegerSet s(horizon);
  if (hi > horizon) hi = horizon;
  for (std::uint64_t n = lo; n < hi; ++n) s.insert(n);
  return s;
}

std::uint64_t FiniteIntegerSet::size() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::vector<std::uint64_t> FiniteIntegerSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::uint64_t FiniteIntegerSet::min_member() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::uint64_t>(std::countr_zero(words_[w]));
  }
  return horizon_;
}

std::uint64_t FiniteIntegerSet::counting(std::uint64_t t) const {
  if (t >= horizon_) throw InvalidInput("counting beyond the horizon");
  return count_in(1, t + 1);
}

std::uint64_t FiniteIntegerSet::count_in(std::uint64_t lo, std::uint64_t hi) const {
  if (hi > horizon_) hi = horizon_;
  return kernels::count_range(words_, lo, hi);
}

FiniteIntegerSet FiniteIntegerSet::intersect(const FiniteIntegerSet& other) const {
  if (other.horizon_ != horizon_) throw InvalidInput("horizon mismatch");
  FiniteIntegerSet out(horizon_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
  return out;
}

FiniteIntegerSet FiniteIntegerSet::unite(const FiniteIntegerSet& other) const {
  if (other.horizon_ != horizon_) throw InvalidInput("horizon mismatch");
  FiniteIntegerSet out(horizon_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] | other.words_[w];
  return out;
}

FiniteIntegerSet sumset(const FiniteIntegerSet& a, const FiniteIntegerSet& b, KernelMode mode) {
  if (a.horizon() != b.horizon()) throw InvalidInput("sumset of sets with different horizons");
  // shift the denser operand by the members of the sparser one
  const FiniteIntegerSet& shifter = a.size() <= b.size() ? a : b;
  const FiniteIntegerSet& shifted = a.size() <= b.size() ? b : a;
  auto shifts = shifter.members();
  std::vector<std::uint64_t> out(shifted.words().size(), 0);
  if (mode == KernelMode::Serial) {
    kernels::shifted_or_serial(shifted.words(), shifts, out, a.horizon());
  } else {
    kernels::shifted_or_parallel(shifted.words(), shifts, out, a.horizon());
  }
  return FiniteIntegerSet::from_words(a.horizon(), std::move(out));
}

FiniteIntegerSet iterated_sumset(const FiniteIntegerSet& a, int k, KernelMode mode) {
  if (k < 1) throw InvalidInput("iterated_sumset needs k >= 1");
  FiniteIntegerSet acc = a;
  for (int j = 2; j <= k; ++j) acc = sumset(acc, a, mode);
  return acc;
}

Rational tail_density(const FiniteIntegerSet& a, std::uint64_t n0, std::uint64_t n1) {
  if (n0 >= n1 || n1 > a.horizon()) throw InvalidInput("empty or out-of-horizon density window");
  return make_rational(BigInt(static_cast<unsigned long>(a.count_in(n0, n1))),
                       BigInt(static_cast<unsigned long>(n1 - n0)));
}

double tail_density_double(const FiniteIntegerSet& a, std::uint64_t n0, std::uint64_t n1) {
  if (n0 >= n1 || n1 > a.horizon()) throw InvalidInput("empty or out-of-horizon density window");
  return static_cast<double>(a.count_in(n0, n1)) / static_cast<double>(n1 - n0);
}

std::uint64_t representation_count(const FiniteIntegerSet& a, int k, std::uint64_t n) {
  if (n >= a.horizon()) throw InvalidInput("representation_count target beyond the horizon");
  if (k < 1) throw InvalidInput("representation_count needs k >= 1");
  // ways[j][s]: j-subsets of the members seen so far with sum s
  const auto ku = static_cast<std::size_t>(k);
  std::vector<std::vector<std::uint64_t>> ways(ku + 1, std::vector<std::uint64_t>(n + 1, 0));
  ways[0][0] = 1;
  for (std::uint64_t u : a.members()) {
    if (u > n) break;
    for (std::size_t j = ku; j >= 1; --j) {
      for (std::uint64_t s = n; s >= u; --s) {
        ways[j][s] += ways[j - 1][s - u];
        if (s == u) break;
      }
    }
  }
  return ways[ku][n];
}

}  // namespace sumdens
