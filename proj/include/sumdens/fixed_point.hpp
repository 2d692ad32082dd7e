#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sumdens/rational.hpp"

namespace sumdens {

using u128 = unsigned __int128;

// (offset + coeff * sqrt(radicand)) / denom with coeff > 0, denom > 0, radicand not a square.
struct QuadraticIrrational {
  BigInt offset;
  BigInt coeff;
  BigInt radicand;
  BigInt denom;
};

// A real number stored as integer part plus a 128-bit binary fraction, together with
// an exact description (rational or quadratic irrational) used to settle comparisons
// that fall inside the fixed-point error budget.
//
// The stored fraction is floor(frac(x) * 2^128), so frac(n x) computed as
// n * fraction mod 2^128 lies at most n units of 2^-128 below the true value.
class FixedPointReal {
 public:
  enum class Exactness { Rational, QuadraticApproximant };

  // zero
  FixedPointReal() : rational_(Rational(0)), label_("0") {}

  static FixedPointReal from_rational(const Rational& q);
  static FixedPointReal from_quadratic(const QuadraticIrrational& q);
  static FixedPointReal sqrt2();
  static FixedPointReal golden();
  // "sqrt2", "golden", "sqrtD", integers, "p/q" and decimals.
  static FixedPointReal parse(std::string_view text);

  const BigInt& integer_part() const { return integer_part_; }
  u128 fraction() const { return fraction_; }
  Exactness exactness() const { return exactness_; }
  bool is_rational() const { return exactness_ == Exactness::Rational; }
  bool is_integer() const { return is_rational() && rational_->get_den() == 1; }
  const std::optional<Rational>& rational() const { return rational_; }
  const std::optional<QuadraticIrrational>& quadratic() const { return quadratic_; }
  const std::string& label() const { return label_; }

  double to_double() const;

  // floor(frac(n x) * 2^128), up to n units low.
  u128 frac_fixed(std::uint64_t n) const { return fraction_ * static_cast<u128>(n); }
  double frac(std::uint64_t n) const;

  // Exact sign of frac(n x) - e for 0 <= e <= 1.
  int compare_frac(std::uint64_t n, const Rational& e) const;
  int compare_frac_exact(std::uint64_t n, const Rational& e) const;
  // Exact floor(n x).
  BigInt floor_mul(std::uint64_t n) const;

 private:
  BigInt floor_mul_exact(std::uint64_t n) const;

  BigInt integer_part_;
  u128 fraction_ = 0;
  Exactness exactness_ = Exactness::Rational;
  std::optional<Rational> rational_;
  std::optional<QuadraticIrrational> quadratic_;
  std::string label_;
};

// Membership of frac(n x) in an interval of [0, 1] with open or closed ends. Decides
// with the fixed-point value when it is clear of the endpoints and falls back to
// exact arithmetic otherwise.
class FracTester {
 public:
  FracTester(const FixedPointReal& x, const Rational& lo, bool lo_closed, const Rational& hi, bool hi_closed);
  bool operator()(std::uint64_t n) const;

 private:
  // sign of frac(n x) - endpoint
  int compare(std::uint64_t n, const Rational& e, u128 e_fixed) const;

  const FixedPointReal* x_;
  Rational lo_, hi_;
  bool lo_closed_, hi_closed_;
  u128 lo_fixed_ = 0, hi_fixed_ = 0;
  bool hi_is_one_ = false;
  // rational x = p/q with everything in 64 bits
  bool small_rational_ = false;
  std::int64_t p_ = 0;
  std::uint64_t q_ = 1;
  std::int64_t lo_num_ = 0, hi_num_ = 0;
  std::uint64_t lo_den_ = 1, hi_den_ = 1;
};

// floor(e * 2^128) for 0 <= e < 1; returns nullopt when e >= 1.
std::optional<u128> fixed_threshold(const Rational& e);

double fixed_to_double(u128 f);

}  // namespace sumdens
