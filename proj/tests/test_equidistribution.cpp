#include <doctest.h>

#include <cmath>
#include <random>

#include "sumdens/equidistribution.hpp"
#include "sumdens/piecewise_poly.hpp"

using namespace sumdens;

namespace {

BigInt isqrt(const BigInt& z) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

// 0 < frac(n sqrt2) < 1/(k+1) by integer arithmetic: with m = floor(n sqrt2),
// (k+1)(n sqrt2 - m) < 1  <=>  2 (k+1)^2 n^2 < (1 + (k+1) m)^2.
bool in_T_sqrt2(int k, long n) {
  BigInt nn(n), kk(k + 1);
  BigInt m = isqrt(2 * nn * nn);
  BigInt rhs = 1 + kk * m;
  return 2 * kk * kk * nn * nn < rhs * rhs;
}

std::vector<std::uint64_t> members(const FiniteIntegerSet& s) { return s.members(); }

}  // namespace

TEST_SUITE("equidistribution") {

TEST_CASE("fixed-point fractional parts track the exact value") {
  auto x = FixedPointReal::sqrt2();
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 128);
  for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 1000ULL, 123456789ULL, 1ULL << 40}) {
    BigInt nn;
    mpz_import(nn.get_mpz_t(), 1, -1, sizeof n, 0, 0, &n);
    // floor(n sqrt2 2^128) mod 2^128
    BigInt exact = isqrt(2 * nn * nn * scale * scale);
    BigInt frac_exact = exact % scale;
    u128 got = x.frac_fixed(n);
    BigInt g_hi(static_cast<unsigned long>(got >> 64)), g_lo(static_cast<unsigned long>(got));
    BigInt g = (g_hi << 64) + g_lo;
    BigInt diff = frac_exact - g;
    CHECK(diff >= 0);
    CHECK(diff <= nn + 1);
    CHECK(x.floor_mul(n) == isqrt(2 * nn * nn));
  }
  CHECK(FixedPointReal::golden().floor_mul(10) == 16);
  CHECK(FixedPointReal::parse("sqrt9").is_integer());
  CHECK(FixedPointReal::parse("3/2").rational() == Rational(3, 2));
  CHECK(FixedPointReal::parse("0.125").rational() == Rational(1, 8));
  CHECK_THROWS(FixedPointReal::parse("pi"));
}

TEST_CASE("exact endpoint comparisons") {
  auto x = FixedPointReal::parse("1/3");
  CHECK(x.compare_frac(3, Rational(0)) == 0);
  CHECK(x.compare_frac(1, Rational(1, 3)) == 0);
  CHECK(x.compare_frac(2, Rational(1, 2)) > 0);
  auto s = FixedPointReal::sqrt2();
  for (std::uint64_t n = 1; n < 500; ++n) {
    for (auto e : {Rational(1, 3), Rational(1, 2), Rational(7, 10)}) {
      CHECK(s.compare_frac(n, e) == s.compare_frac_exact(n, e));
    }
  }
}

TEST_CASE("beatty sets") {
  auto s2 = FixedPointReal::sqrt2();
  CHECK(members(beatty_T(1, s2, 11)) == std::vector<std::uint64_t>{1, 3, 5, 6, 8, 10});
  CHECK(members(beatty_T(3, FixedPointReal::parse("2"), 5)) == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(members(beatty_T(2, s2, 4)) == std::vector<std::uint64_t>{3});
  for (int k = 1; k <= 4; ++k) {
    auto t = beatty_T(k, s2, 3000);
    for (long n = 1; n < 3000; ++n) CHECK(t.contains(static_cast<std::uint64_t>(n)) == in_T_sqrt2(k, n));
  }
  auto t = beatty_T(2, s2, 1000000);
  double d = tail_density_double(t, 500000, 1000000);
  CHECK(std::abs(d - 1.0 / 3) <= 3.0 / std::sqrt(500000.0));
}

TEST_CASE("rational theta edge cases") {
  // frac(n/3) is 0 for multiples of 3 and the open end at 0 excludes them
  auto t = beatty_T(1, FixedPointReal::parse("1/3"), 10);
  CHECK(members(t) == std::vector<std::uint64_t>{1, 4, 7});
  auto b = b_lambda(TorusSet::interval(Rational(0), Rational(1, 3)), FixedPointReal::parse("1/3"), 10);
  CHECK(members(b) == std::vector<std::uint64_t>{1, 3, 4, 6, 7, 9});
}

TEST_CASE("B_lambda sets") {
  auto s2 = FixedPointReal::sqrt2();
  CHECK(members(b_lambda(TorusSet::full_circle(), s2, 20)).size() == 19);
  CHECK(members(b_lambda(TorusSet::interval(Rational(0), Rational(1, 2)), s2, 11)) ==
        std::vector<std::uint64_t>{1, 3, 5, 6, 8, 10});
  CHECK(b_lambda(TorusSet(), s2, 20).empty());
}

TEST_CASE("X_theta") {
  auto s2 = FixedPointReal::sqrt2();
  EtaSpec eta;
  auto x = x_theta(s2, eta, 1000000);
  CHECK_FALSE(x.contains(50));
  CHECK_FALSE(x.contains(1));
  CHECK(tail_density_double(x, 100000, 1000000) >= 0.99);
  CHECK_THROWS_AS(EtaSpec::parse("0.7"), InvalidInput);
  CHECK_THROWS_AS(EtaSpec::parse("0.5:0.5"), InvalidInput);
  CHECK_THROWS_AS(EtaSpec::parse("abc"), ParseError);
  CHECK(EtaSpec::parse("2:0.25").coefficient == 2.0);
}

TEST_CASE("discrepancy inequality") {
  auto golden = FixedPointReal::golden();
  auto p = discrepancy_check(golden, {Rational(0), Rational(1, 2)}, 1000, 10);
  CHECK(p.lhs <= p.bound);
  CHECK(p.lhs >= 0);
  CHECK(discrepancy_check(golden, {Rational(0), Rational(1)}, 1000, 10).lhs == 0.0);
  auto w = discrepancy_check(FixedPointReal::sqrt2(), {Rational(1, 5), Rational(3, 4)}, 5000, 50, 123456);
  CHECK(w.lhs <= w.bound);
}

TEST_CASE("Weyl averages") {
  auto s2 = FixedPointReal::sqrt2();
  auto ind = PiecewisePolynomial::indicator(Rational(0), Rational(1, 2));
  CHECK(std::abs(weyl_average(ind, s2, 100000) - 0.5) <= 0.01);
  auto f2 = f_family(2)[1];
  CHECK(std::abs(weyl_average(f2, s2, 100000) - 1.0 / 9) <= 0.01);
  auto one = PiecewisePolynomial::constant_on(Rational(0), Rational(1), Rational(1));
  CHECK(weyl_average(one, s2, 1000) == 1.0);
}

}
