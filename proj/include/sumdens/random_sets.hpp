#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumdens/fixed_point.hpp"
#include "sumdens/integer_set.hpp"

namespace sumdens {

// Stream identifiers for the counter-based generator: draw m of stream s under seed t
// is Philox(counter = (m, s), key = t).
enum class RandomStream : std::uint64_t { PseudoPower = 1, PairSet = 2, Sampling = 3 };

double random_uniform(std::uint64_t seed, RandomStream stream, std::uint64_t index);
// `count` integers drawn uniformly from [lo, hi) with replacement, draws 0..count-1 of the
// Sampling stream.
std::vector<std::uint64_t> sample_integers(std::uint64_t lo, std::uint64_t hi, std::size_t count,
                                           std::uint64_t seed);

struct SamplerConfig {
  int k = 2;
  double c = 1.0;
  FixedPointReal theta = FixedPointReal::sqrt2();
  std::uint64_t horizon = 100000;
  std::uint64_t seed = 0;
};

// m in [1, N) independently with probability min(1, c m^(-1 + 1/k)).
FiniteIntegerSet sample_pseudo_powers(const SamplerConfig& cfg);
// S ∩ T_{k,θ}
FiniteIntegerSet restrict_to_T(const FiniteIntegerSet& s, int k, const FixedPointReal& theta);

// n ∈ T_{1,θ} independently with probability β, or n^(-1/5) when β = 0.
FiniteIntegerSet sample_pair_set(const FixedPointReal& theta, const Rational& beta, std::uint64_t horizon,
                                 std::uint64_t seed);

// |{n ∈ X : n >= n0, n ∉ S2}|
std::uint64_t coverage_gap(const FiniteIntegerSet& s2, const FiniteIntegerSet& x, std::uint64_t n0);

struct SumsetDensity {
  int j = 0;
  double density = 0.0;
  double predicted = 0.0;
  double deviation = 0.0;
};

struct SimulationReport {
  SamplerConfig config;
  std::uint64_t window_lo = 0;
  std::uint64_t window_hi = 0;
  std::uint64_t sample_size = 0;
  double lambda = 0.0;
  double big_f = 0.0;
  // 1 - (k+1)/k F_k(c): density of kA inside k T_{k,θ}
  double beta_inside_kT = 0.0;
  std::vector<SumsetDensity> sumsets;  // j = 1..k+1
  // |jA ∩ [lo + j m, hi + j m)| with m = min(A); nondecreasing in j since jA + m ⊆ (j+1)A
  std::vector<std::uint64_t> translated_counts;
  bool translated_monotone = true;
  double runtime_seconds = 0.0;
};

// Samples, restricts to T_{k,θ} and measures jA for j <= k+1 on [N/2, N).
// Requires 1 <= k <= 4 and N >= 10^5.
SimulationReport density_report(const SamplerConfig& cfg);
// Limit of d(kA): k/(k+1) - F_k(c) for irrational θ, 1 - exp(-c^k λ_k) for integer θ.
double predicted_kA_density(const SamplerConfig& cfg, double tol = 1e-10);

// Σ over u_1 < ... < u_k in T_{k,θ} with sum n of (u_1 ... u_k)^(-1 + 1/k); k ∈ {2, 3}.
double s_k_bruteforce(int k, const FixedPointReal& theta, std::uint64_t n);
// Same sum with a precomputed T_{k,θ} of horizon > n.
double s_k_bruteforce(int k, const FiniteIntegerSet& t, std::uint64_t n);

// J_N(α, β) = Σ_{0<x<N} x^-α (N - x)^-β
double j_sum(double alpha, double beta, std::uint64_t n);
// B(1-α, 1-β) N^(1-α-β) for β < 1, N^-α log N for β = 1, ζ(β) N^-α for β > 1.
double j_asymptote(double alpha, double beta, std::uint64_t n);

}  // namespace sumdens
