#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sumdens/set_io.hpp"
#include "sumdens/torus_set.hpp"

using namespace sumdens;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

TorusSet from(std::initializer_list<std::pair<Rational, Rational>> ivs) {
  RawIntervalList raw;
  for (const auto& [lo, hi] : ivs) raw.push_back({lo, hi});
  return TorusSet::normalize(raw);
}

std::vector<TorusInterval> ivs(std::initializer_list<std::pair<Rational, Rational>> list) {
  std::vector<TorusInterval> out;
  for (const auto& [lo, hi] : list) out.push_back({lo, hi});
  return out;
}

}  // namespace

TEST_SUITE("torus_sets") {

TEST_CASE("normalize splits at 0 and merges touching intervals") {
  CHECK(from({{q(0), q(1, 4)}}).intervals() == ivs({{q(0), q(1, 4)}}));
  CHECK(from({{q(3, 4), q(5, 4)}}).intervals() == ivs({{q(0), q(1, 4)}, {q(3, 4), q(1)}}));
  CHECK(from({{q(0), q(1, 2)}, {q(1, 2), q(3, 5)}}).intervals() == ivs({{q(0), q(3, 5)}}));
  CHECK(from({{q(-1, 4), q(1, 8)}}).intervals() == ivs({{q(0), q(1, 8)}, {q(3, 4), q(1)}}));
  CHECK(from({{q(0), q(3)}}).is_full());
  CHECK_THROWS_AS(from({{q(1, 2), q(1, 2)}}), InvalidInput);
  CHECK_THROWS_AS(from({{q(1, 2), q(1, 3)}}), InvalidInput);
}

TEST_CASE("measure and components") {
  CHECK(TorusSet().measure() == 0);
  CHECK(from({{q(0), q(1, 4)}}).measure() == q(1, 4));
  TorusSet a = from({{q(0), q(3, 20)}, {q(1, 4), q(3, 10)}});
  CHECK(a.measure() == q(1, 5));
  CHECK(a.component_count() == 2);
  CHECK(from({{q(9, 10), q(11, 10)}}).component_count() == 1);
  CHECK(TorusSet::full_circle().component_count() == 1);
}

TEST_CASE("minkowski sum examples") {
  CHECK(minkowski_sum(from({{q(0), q(1, 4)}}), from({{q(0), q(1, 4)}})).intervals() == ivs({{q(0), q(1, 2)}}));
  TorusSet a = from({{q(0), q(3, 20)}, {q(1, 4), q(3, 10)}});
  TorusSet two = minkowski_sum(a, a);
  CHECK(two.intervals() == ivs({{q(0), q(9, 20)}, {q(1, 2), q(3, 5)}}));
  CHECK(two.measure() == q(11, 20));
  TorusSet w = from({{q(9, 10), q(1)}, {q(0), q(1, 10)}});
  TorusSet w2 = minkowski_sum(w, w);
  CHECK(w2.intervals() == ivs({{q(0), q(1, 5)}, {q(4, 5), q(1)}}));
  CHECK(w2.measure() == q(2, 5));
  CHECK(minkowski_sum(TorusSet(), a).empty());
}

TEST_CASE("iterated sumsets and profiles") {
  CHECK(iterated_sumset(from({{q(0), q(1, 10)}}), 3).intervals() == ivs({{q(0), q(3, 10)}}));
  CHECK(iterated_sumset(from({{q(0), q(1, 6)}, {q(1, 3), q(1, 2)}}), 2).is_full());
  CHECK(iterated_sumset(from({{q(0), q(1, 4)}}), 5).is_full());
  CHECK_THROWS(iterated_sumset(from({{q(0), q(1, 4)}}), 0));
  CHECK(sumset_profile(from({{q(0), q(1, 10)}}), 3) == std::vector<Rational>{q(1, 10), q(1, 5), q(3, 10)});
  CHECK(sumset_profile(from({{q(0), q(3, 20)}, {q(1, 4), q(3, 10)}}), 2) == std::vector<Rational>{q(1, 5), q(11, 20)});
  CHECK(sumset_profile(from({{q(0), q(2, 25)}, {q(11, 100), q(13, 100)}}), 3) ==
        std::vector<Rational>{q(1, 10), q(1, 4), q(39, 100)});
}

TEST_CASE("scale and translate") {
  CHECK(scale_raw({{q(0), q(1)}}, q(1, 2)) == RawIntervalList{{q(0), q(1, 2)}});
  CHECK(scale_raw({{q(0), q(1, 3)}, {q(2, 3), q(1)}}, q(2, 5)) == RawIntervalList{{q(0), q(2, 15)}, {q(4, 15), q(2, 5)}});
  CHECK(translate_raw({{q(0), q(1, 10)}}, q(1, 4)) == RawIntervalList{{q(1, 4), q(7, 20)}});
  CHECK_THROWS_AS(scale_raw({{q(0), q(1)}}, q(0)), InvalidInput);
}

TEST_CASE("minkowski sum agrees with the grid-membership oracle") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    long den = 5 + static_cast<long>(rng() % 40);
    TorusSet a = oracle::random_union(rng, 5, den);
    TorusSet b = oracle::random_union(rng, 5, 3 + static_cast<long>(rng() % 30));
    TorusSet s = minkowski_sum(a, b);
    long m = oracle::lcm_of_denominators({&a, &b});
    CHECK(s.measure() == oracle::sum_measure_on_grid(a, b, m));
    // every endpoint lies on the grid; check membership on grid points and midpoints
    for (long i = 0; i <= 2 * m; ++i) {
      Rational t = oracle::frac(i, 2 * m);
      if (oracle::in_sum(a, b, t) != s.contains(t)) {
        FAIL("membership mismatch at " << to_string(t));
      }
    }
  }
}

TEST_CASE("sum is commutative and contains both translates") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    TorusSet a = oracle::random_union(rng, 6, 60);
    TorusSet b = oracle::random_union(rng, 6, 48);
    TorusSet ab = minkowski_sum(a, b);
    CHECK(ab == minkowski_sum(b, a));
    CHECK(ab.measure() >= std::max(a.measure(), b.measure()));
    CHECK(ab.measure() <= 1);
  }
}

TEST_CASE("set file round trip") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    TorusSet a = oracle::random_union(rng, 6, 97);
    CHECK(parse_torus_set(torus_to_json(a)) == a);
    CHECK(parse_torus_set(torus_to_lines(a)) == a);
  }
  CHECK(parse_torus_set("{\"intervals\": [[\"3/4\", \"5/4\"]]}").intervals() ==
        ivs({{q(0), q(1, 4)}, {q(3, 4), q(1)}}));
  CHECK(parse_torus_set("# comment\n0 1/3\n\n2/3 1\n").measure() == q(2, 3));
  CHECK(parse_torus_set("").empty());
  CHECK_THROWS_AS(parse_torus_set("{\"intervals\": [[\"1/2\"]]}"), ParseError);
  CHECK_THROWS_AS(parse_torus_set("{\"intervals\": [[\"1/2\", \"x\"]]"), ParseError);
  CHECK_THROWS_AS(parse_torus_set("0 1/2 3/4\n"), ParseError);
  CHECK_THROWS_AS(parse_torus_set("0 1/0\n"), ParseError);
}

}
