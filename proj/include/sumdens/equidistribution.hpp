#pragma once

#include <cstdint>
#include <string_view>

#include "sumdens/fixed_point.hpp"
#include "sumdens/integer_set.hpp"
#include "sumdens/piecewise_poly.hpp"
#include "sumdens/torus_set.hpp"

namespace sumdens {

// η(n) = coefficient * n^(-exponent). Must dominate n^(-1/2) for n >= 1.
struct EtaSpec {
  double coefficient = 1.0;
  double exponent = 0.5;

  // "E" or "C:E"
  static EtaSpec parse(std::string_view text);
  void validate() const;
  double operator()(double n) const;
};

// T_{k,θ} ∩ [1, N) = {n : 0 < {θn} < 1/(k+1)}; all of [1, N) when θ is an integer.
FiniteIntegerSet beatty_T(int k, const FixedPointReal& theta, std::uint64_t horizon);

// {1 <= n < N : {λn} ∈ A}, with exact endpoint comparisons.
FiniteIntegerSet b_lambda(const TorusSet& a, const FixedPointReal& lambda, std::uint64_t horizon);

// X_θ ∩ [1, N) = {n : 2η(n/2) < {θn} < 1 - 2η(n/2)}.
FiniteIntegerSet x_theta(const FixedPointReal& theta, const EtaSpec& eta, std::uint64_t horizon);

struct DiscrepancyProfile {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t offset = 0;
  double lhs = 0.0;
  double bound = 0.0;
  FixedPointReal theta;
  TorusInterval interval;
};

// Both sides of the Erdős–Turán inequality (constant 3) for s_j = {θ j}, X < j <= X + N:
//   lhs   = |#{j : s_j ∈ I}/N - μ(I)|
//   bound = 3 (1/(m+1) + (1/N) Σ_{h<=m} (1/h) |sin(π N h θ) / sin(π h θ)|)
DiscrepancyProfile discrepancy_check(const FixedPointReal& theta, const TorusInterval& interval,
                                     std::uint64_t n, std::uint64_t m, std::uint64_t offset = 0);

// (1/N) Σ_{X < n <= X + N} f({θn})
double weyl_average(const PiecewisePolynomial& f, const FixedPointReal& theta, std::uint64_t n,
                    std::uint64_t offset = 0);

}  // namespace sumdens
