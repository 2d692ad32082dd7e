#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace sumdens::kernels {

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// out |= OR over s in shifts of (b << s), truncated to `horizon` bits.
// `b` and `out` hold words_for(horizon) words. Shifts are ascending.
//
// The serial routine is the reference: shifts outer, words inner. The OpenMP
// routine partitions the output words across threads and must produce
// bit-identical results.
void shifted_or_serial(std::span<const std::uint64_t> b, std::span<const std::uint64_t> shifts,
                       std::span<std::uint64_t> out, std::size_t horizon);
void shifted_or_parallel(std::span<const std::uint64_t> b, std::span<const std::uint64_t> shifts,
                         std::span<std::uint64_t> out, std::size_t horizon);

// Clears bits at positions >= horizon in the last word.
void mask_tail(std::span<std::uint64_t> words, std::size_t horizon);

// Number of set bits at positions in [lo, hi).
std::uint64_t count_range(std::span<const std::uint64_t> words, std::size_t lo, std::size_t hi);

int max_threads();
void set_threads(int n);

}  // namespace sumdens::kernels
