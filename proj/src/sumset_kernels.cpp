#include "sumdens/sumset_kernels.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sumdens::kernels {

namespace {

// Words [w_begin, w_end) of (b << shift) OR-ed into out.
inline void or_shifted_range(const std::uint64_t* b, std::size_t nwords, std::uint64_t shift,
                             std::uint64_t* out, std::size_t w_begin, std::size_t w_end) {
  const std::size_t q = static_cast<std::size_t>(shift / 64);
  const unsigned r = static_cast<unsigned>(shift % 64);
  std::size_t start = std::max(w_begin, q);
  std::size_t end = std::min(w_end, nwords);
  if (start >= end) return;
  if (r == 0) {
    for (std::size_t w = start; w < end; ++w) out[w] |= b[w - q];
    return;
  }
  std::size_t w = start;
  if (w == q) {
    out[w] |= b[0] << r;
    ++w;
  }
  for (; w < end; ++w) out[w] |= (b[w - q] << r) | (b[w - q - 1] >> (64 - r));
}

constexpr std::size_t kBlockWords = 2048;

}  // namespace

void mask_tail(std::span<std::uint64_t> words, std::size_t horizon) {
  std::size_t nwords = words_for(horizon);
  for (std::size_t w = nwords; w < words.size(); ++w) words[w] = 0;
  if (horizon % 64 != 0 && nwords > 0) words[nwords - 1] &= (~std::uint64_t{0}) >> (64 - horizon % 64);
}

void shifted_or_serial(std::span<const std::uint64_t> b, std::span<const std::uint64_t> shifts,
                       std::span<std::uint64_t> out, std::size_t horizon) {
  const std::size_t nwords = words_for(horizon);
  for (std::uint64_t s : shifts) {
    if (s >= horizon) continue;
    or_shifted_range(b.data(), nwords, s, out.data(), 0, nwords);
  }
  mask_tail(out, horizon);
}

void shifted_or_parallel(std::span<const std::uint64_t> b, std::span<const std::uint64_t> shifts,
                         std::span<std::uint64_t> out, std::size_t horizon) {
  const std::size_t nwords = words_for(horizon);
  const std::size_t nblocks = (nwords + kBlockWords - 1) / kBlockWords;
  const std::uint64_t* bp = b.data();
  std::uint64_t* op = out.data();
  const auto nshifts = static_cast<std::ptrdiff_t>(shifts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(nblocks); ++blk) {
    const std::size_t w_begin = static_cast<std::size_t>(blk) * kBlockWords;
    const std::size_t w_end = std::min(nwords, w_begin + kBlockWords);
    for (std::ptrdiff_t i = 0; i < nshifts; ++i) {
      const std::uint64_t s = shifts[static_cast<std::size_t>(i)];
      if (s / 64 >= w_end) break;  // shifts are ascending
      or_shifted_range(bp, nwords, s, op, w_begin, w_end);
    }
  }
  mask_tail(out, horizon);
}

std::uint64_t count_range(std::span<const std::uint64_t> words, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return 0;
  std::size_t lw = lo / 64, hw = (hi - 1) / 64;
  std::uint64_t lmask = ~std::uint64_t{0} << (lo % 64);
  std::uint64_t hmask = ~std::uint64_t{0} >> (63 - (hi - 1) % 64);
  if (lw == hw) return static_cast<std::uint64_t>(std::popcount(words[lw] & lmask & hmask));
  std::uint64_t total = static_cast<std::uint64_t>(std::popcount(words[lw] & lmask));
  for (std::size_t w = lw + 1; w < hw; ++w) total += static_cast<std::uint64_t>(std::popcount(words[w]));
  total += static_cast<std::uint64_t>(std::popcount(words[hw] & hmask));
  return total;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace sumdens::kernels
