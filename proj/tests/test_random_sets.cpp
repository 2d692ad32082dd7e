#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sumdens/equidistribution.hpp"
#include "sumdens/philox.hpp"
#include "sumdens/random_sets.hpp"
#include "sumdens/special_functions.hpp"

using namespace sumdens;

TEST_SUITE("random_sets") {

TEST_CASE("Philox4x32-10 known answers") {
  // Random123 kat_vectors
  auto z = Philox4x32::generate({0, 0, 0, 0}, {0, 0});
  CHECK(z == Philox4x32::Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  auto f = Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff});
  CHECK(f == Philox4x32::Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  auto p = Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
  CHECK(p == Philox4x32::Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("samplers are deterministic and seed-sensitive") {
  SamplerConfig cfg;
  cfg.horizon = 200000;
  cfg.seed = 11;
  auto a = sample_pseudo_powers(cfg);
  CHECK(a == sample_pseudo_powers(cfg));
  cfg.seed = 12;
  CHECK_FALSE(a == sample_pseudo_powers(cfg));
  cfg.c = 0;
  CHECK(sample_pseudo_powers(cfg).empty());
  CHECK(sample_integers(10, 20, 5, 3) == sample_integers(10, 20, 5, 3));
  for (auto n : sample_integers(10, 20, 100, 3)) CHECK((n >= 10 && n < 20));
}

TEST_CASE("pseudo-power sample size") {
  SamplerConfig cfg;
  cfg.horizon = 4000000;
  int ok = 0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    cfg.seed = s;
    double size = static_cast<double>(sample_pseudo_powers(cfg).size());
    double expect = 2 * std::sqrt(4e6);
    if (std::abs(size - expect) <= 5 * std::pow(4e6, 0.25)) ++ok;
  }
  CHECK(ok >= 4);
}

TEST_CASE("restriction to T") {
  SamplerConfig cfg;
  cfg.horizon = 50000;
  auto s = sample_pseudo_powers(cfg);
  CHECK(restrict_to_T(s, 2, FixedPointReal::parse("2")) == s);
  auto full = FiniteIntegerSet::range(1000, 1, 1000);
  CHECK(restrict_to_T(full, 1, FixedPointReal::sqrt2()) == beatty_T(1, FixedPointReal::sqrt2(), 1000));
  CHECK(restrict_to_T(FiniteIntegerSet(1000), 1, FixedPointReal::sqrt2()).empty());
}

TEST_CASE("pair sampler") {
  auto s2 = FixedPointReal::sqrt2();
  CHECK(sample_pair_set(s2, Rational(1), 5000, 3) == beatty_T(1, s2, 5000));
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto a = sample_pair_set(s2, Rational(1, 2), 1000000, seed);
    if (std::abs(tail_density_double(a, 500000, 1000000) - 0.25) <= 0.01) ++ok;
  }
  CHECK(ok >= 4);
  // independent seeds in constant-β mode: symmetric difference inside T near 2p(1-p)
  auto x = sample_pair_set(s2, Rational(1, 2), 200000, 1);
  auto y = sample_pair_set(s2, Rational(1, 2), 200000, 2);
  auto t = beatty_T(1, s2, 200000);
  double both = static_cast<double>(x.intersect(y).size());
  double diff = static_cast<double>(x.size() + y.size()) - 2 * both;
  CHECK(std::abs(diff / static_cast<double>(t.size()) - 0.5) <= 0.02);
  auto zero = sample_pair_set(s2, Rational(0), 1000000, 4);
  // β = 0 keeps each k in T with probability k^{-1/5}
  auto t_full = beatty_T(1, s2, 1000000);
  double expect = 0;
  for (std::uint64_t k = 500000; k < 1000000; ++k) {
    if (t_full.contains(k)) expect += std::pow(static_cast<double>(k), -0.2);
  }
  expect /= 500000.0;
  CHECK(std::abs(tail_density_double(zero, 500000, 1000000) - expect) <= 0.002);
  CHECK(tail_density_double(zero, 500000, 1000000) < tail_density_double(zero, 5000, 10000));
  CHECK_THROWS(sample_pair_set(s2, Rational(3, 2), 100, 1));
}

TEST_CASE("coverage gap") {
  auto x = FiniteIntegerSet::range(100, 10, 50);
  CHECK(coverage_gap(FiniteIntegerSet::range(100, 0, 100), x, 0) == 0);
  CHECK(coverage_gap(FiniteIntegerSet(100), x, 0) == 40);
  CHECK(coverage_gap(FiniteIntegerSet(100), x, 99) <= 1);
  CHECK_THROWS(coverage_gap(FiniteIntegerSet(100), x, 100));
}

TEST_CASE("S_k vanishes off (0, k/(k+1))") {
  auto s2 = FixedPointReal::sqrt2();
  int zeros = 0;
  for (std::uint64_t n = 2; n < 400; ++n) {
    double f = s2.frac(n);
    if (f >= 2.0 / 3) {
      CHECK(s_k_bruteforce(2, s2, n) == 0.0);
      ++zeros;
    }
    if (f >= 3.0 / 4) CHECK(s_k_bruteforce(3, s2, n) == 0.0);
  }
  CHECK(zeros > 50);
  CHECK_THROWS(s_k_bruteforce(4, s2, 100));
  CHECK_THROWS(s_k_bruteforce(3, s2, 30000));
}

TEST_CASE("S_2 by direct enumeration") {
  auto s2 = FixedPointReal::sqrt2();
  auto t = beatty_T(2, s2, 200);
  for (std::uint64_t n = 2; n < 200; ++n) {
    double expect = 0;
    for (std::uint64_t u = 1; u < n; ++u) {
      std::uint64_t v = n - u;
      if (u < v && t.contains(u) && t.contains(v)) expect += 1.0 / std::sqrt(static_cast<double>(u * v));
    }
    CHECK(s_k_bruteforce(2, s2, n) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("J_N sums") {
  CHECK(std::abs(j_sum(0.5, 0.5, 1000000) - std::numbers::pi) < 0.01);
  double r3 = j_sum(0.5, 1.5, 1000000) / j_asymptote(0.5, 1.5, 1000000);
  CHECK(std::abs(r3 - 1) < 0.02);
  double r2 = j_sum(0.5, 1.0, 1000000) / j_asymptote(0.5, 1.0, 1000000);
  // N^{-1/2} log N is only the leading term; the next one is (γ + 2 log 2) N^{-1/2}
  double direct = 0;
  for (std::uint64_t x = 1; x < 1000000; ++x) direct += 1.0 / (std::sqrt(static_cast<double>(x)) * static_cast<double>(1000000 - x));
  CHECK(j_sum(0.5, 1.0, 1000000) == doctest::Approx(direct).epsilon(1e-9));
  CHECK(std::abs(r2 - (1 + (std::numbers::egamma + 2 * std::numbers::ln2) / std::log(1e6))) <= 0.005);
  // ratios approach 1 along N = 10^4, 10^5, 10^6
  for (double beta : {0.5, 1.0, 1.5}) {
    double prev = 1e9;
    for (std::uint64_t n : {10000ULL, 100000ULL, 1000000ULL}) {
      double err = std::abs(j_sum(0.5, beta, n) / j_asymptote(0.5, beta, n) - 1);
      CHECK(err <= prev + 1e-9);
      prev = err;
    }
  }
  CHECK(j_sum(0.3, 0.4, 2) == doctest::Approx(1.0));
  CHECK_THROWS(j_sum(1.0, 0.5, 100));
  CHECK_THROWS(j_sum(0.5, 0.0, 100));
}

TEST_CASE("density report structure") {
  SamplerConfig cfg;
  cfg.horizon = 200000;
  cfg.seed = 5;
  auto r = density_report(cfg);
  REQUIRE(r.sumsets.size() == 3);
  CHECK(r.sumsets[0].predicted == 0.0);
  CHECK(r.sumsets[2].predicted == 1.0);
  CHECK(r.sumsets[1].predicted == doctest::Approx(2.0 / 3 - 0.518991731593009379).epsilon(1e-9));
  for (const auto& d : r.sumsets) CHECK((d.density >= 0 && d.density <= 1));
  CHECK(r.translated_monotone);
  CHECK(r.beta_inside_kT == doctest::Approx(1 - 1.5 * r.big_f));
  auto again = density_report(cfg);
  CHECK(again.sample_size == r.sample_size);
  CHECK(again.sumsets[1].density == r.sumsets[1].density);
  cfg.horizon = 1000;
  CHECK_THROWS(density_report(cfg));
}

}
