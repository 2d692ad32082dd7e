#pragma once

namespace sumdens::tolerances {

// Empirical bands for finite-N statistical checks. The asymptotic statements they stand
// in for carry unquantified o(1) terms, so these are calibrated, not derived.
inline constexpr double kDensity = 0.01;        // windowed density vs a limit value
inline constexpr double kSumsetDensity = 0.02;  // d(kA) vs k/(k+1) - F_k(c)
inline constexpr double kRepresentation = 0.25; // median |S_k(n) / (λ_k f_k) - 1|
inline constexpr double kJSumCase3 = 0.02;      // J_N / (ζ(β) N^-α) - 1
inline constexpr double kJSumCase2Lo = 0.9;     // J_N / (N^-α log N)
inline constexpr double kJSumCase2Hi = 1.1;
inline constexpr double kJSumCase1 = 0.01;      // |J_N - B(1-α, 1-β) N^(1-α-β)|
inline constexpr int kSeeds = 5;
inline constexpr int kSeedsRequired = 4;

}  // namespace sumdens::tolerances
