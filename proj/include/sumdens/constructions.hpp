#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sumdens/fixed_point.hpp"
#include "sumdens/integer_set.hpp"
#include "sumdens/torus_set.hpp"

namespace sumdens {

struct IntervalUnionRecipe {
  TorusSet set;
};

// [0, x] ∪ ⋃_{i=2..k} [i x - ε, i x]
struct APThickeningRecipe {
  int k = 2;
  Rational x;
  Rational eps;
};

// [0, a] ∪ (β/2) C_3(depth)
struct CantorHybridRecipe {
  Rational a;
  Rational beta;
  int depth = 0;
};

// {0, ..., r-1} + g B with B ⊆ [0, N/g) random of density γ
struct RationalResidueRecipe {
  int g = 1;
  int r = 1;
  Rational gamma;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;
};

// S ∩ T_{k,θ} for pseudo k-th powers S
struct PseudoPowerRecipe {
  int k = 2;
  double c = 1.0;
  std::string theta = "sqrt2";
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;
};

using WitnessRecipe = std::variant<IntervalUnionRecipe, APThickeningRecipe, CantorHybridRecipe,
                                   RationalResidueRecipe, PseudoPowerRecipe>;

std::string recipe_kind(const WitnessRecipe& recipe);
// Circle recipes materialize to a TorusSet, integer recipes to a FiniteIntegerSet.
std::variant<TorusSet, FiniteIntegerSet> materialize(const WitnessRecipe& recipe);

// Requested tuple lies outside what the operation can produce.
class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PairWitness {
  WitnessRecipe recipe;
  TorusSet set;
};

// A ⊂ T with μ(A) = α and μ(2A) = β exactly; 0 < α <= 1, min(2α, 1) <= β <= 1.
PairWitness pair_witness(const Rational& alpha, const Rational& beta);

// Depth-d prefix of the Cantor set of [0, 1] with dissection ratio 1/(k+1): 2^d intervals
// of length (k+1)^-d. ratio_denom = k + 1 >= 3.
RawIntervalList cantor_approx(int ratio_denom, int depth);
// (β/2) C_3(depth) on the circle; μ(2A) = β at every depth.
TorusSet cantor_pair_witness(const Rational& beta, int depth);

struct KneserCertificate {
  enum class Reason { Feasible, InfeasibleDyadic, InfeasibleRange, NotApplicable };
  bool feasible = false;
  Reason reason = Reason::NotApplicable;
  std::optional<std::int64_t> g0;
  std::optional<std::int64_t> r;
};

std::string to_string(KneserCertificate::Reason reason);

// Decides whether (α, β) with β < 2α is a density pair (d(A), d(2A)) of an integer set.
KneserCertificate kneser_feasibility(const Rational& alpha, const Rational& beta);

class Infeasible : public std::runtime_error {
 public:
  Infeasible(const std::string& what, KneserCertificate cert) : std::runtime_error(what), certificate(cert) {}
  KneserCertificate certificate;
};

struct RationalWitness {
  KneserCertificate certificate;
  RationalResidueRecipe recipe;
  FiniteIntegerSet set;
};

// R + g0 B with R = {0, ..., r-1}; throws Infeasible when the certificate says no.
RationalWitness rational_witness(const Rational& alpha, const Rational& beta, std::uint64_t horizon,
                                 std::uint64_t seed);

// Region of (μ(A), μ(2A), μ(3A)) for A ⊂ [0, 1/3] with at most two components:
//   β ∈ [2α, 3α], γ ∈ [3β/2, 2β - α), or β = 3α, γ ∈ [3β/2, 2β],
// together with the single-interval point (α, 2α, 3α).
bool triplet_region_contains(const Rational& alpha, const Rational& beta, const Rational& gamma);
// Same region with the boundary γ = 2β - α included.
bool triplet_region_closure_contains(const Rational& alpha, const Rational& beta, const Rational& gamma);

struct TripletWitness {
  std::string branch;
  Rational x, y, z;
  TorusSet set;
};

class NoTwoIntervalWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A = [0, x] ∪ [y, z] with profile (α, β, γ); throws NoTwoIntervalWitness when no branch of
// the case analysis applies.
TripletWitness triplet_witness(const Rational& alpha, const Rational& beta, const Rational& gamma);

struct RegionScanRow {
  Rational x, y, z;
  std::vector<Rational> profile;
  bool in_region = false;
};

// All A = [0, x] ∪ [y, z] with 0 <= x <= y <= z <= floor(D/3)/D on the grid (1/D)Z.
std::vector<RegionScanRow> region_scan(int denominator, int kmax = 3);

// {0, 1, ..., r-2, r}, r >= 3
std::vector<std::uint64_t> u_progression(int r);
// |jU| computed by exact sumsets
std::uint64_t u_sumset_size(int r, int j);

// {floor(θ a) : a ∈ A}, θ > 1; horizon floor(θ (N-1)) + 1.
FiniteIntegerSet floor_scale(const FiniteIntegerSet& a, const FixedPointReal& theta);
// {q a : a ∈ A}, q >= 1; horizon q (N-1) + 1.
FiniteIntegerSet dilate(const FiniteIntegerSet& a, std::uint64_t q);
// Number of multisets {a_1, ..., a_{k+1}} from `members` with
// Σ floor(θ a_i) != floor(θ Σ a_i).
std::uint64_t floor_additivity_violations(const std::vector<std::uint64_t>& members,
                                          const FixedPointReal& theta, int k);

}  // namespace sumdens
