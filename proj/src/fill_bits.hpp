#pragma once

#include <cstdint>
#include <vector>

#include "sumdens/integer_set.hpp"
#include "sumdens/sumset_kernels.hpp"

namespace sumdens::detail {

// Set of 1 <= n < horizon with pred(n). Each iteration owns one output word, so the
// loop parallelizes without synchronization and the result does not depend on the
// thread count.
template <class Pred>
FiniteIntegerSet fill_by_predicate(std::uint64_t horizon, const Pred& pred) {
  const std::size_t nwords = kernels::words_for(horizon);
  std::vector<std::uint64_t> words(nwords, 0);
  const auto nw = static_cast<std::int64_t>(nwords);
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < nw; ++w) {
    std::uint64_t word = 0;
    const std::uint64_t base = static_cast<std::uint64_t>(w) * 64;
    for (std::uint64_t b = 0; b < 64; ++b) {
      std::uint64_t n = base + b;
      if (n == 0 || n >= horizon) continue;
      if (pred(n)) word |= std::uint64_t{1} << b;
    }
    words[static_cast<std::size_t>(w)] = word;
  }
  return FiniteIntegerSet::from_words(horizon, std::move(words));
}

}  // namespace sumdens::detail
