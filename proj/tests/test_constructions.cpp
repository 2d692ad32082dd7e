#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sumdens/constructions.hpp"

using namespace sumdens;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<TorusInterval> ivs(std::initializer_list<std::pair<Rational, Rational>> list) {
  std::vector<TorusInterval> out;
  for (const auto& [lo, hi] : list) out.push_back({lo, hi});
  return out;
}

const oracle::PeriodicTable& periodic_table() {
  static const oracle::PeriodicTable table(24);
  return table;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("pair witness examples") {
  auto ap = pair_witness(q(1, 5), q(11, 20));
  REQUIRE(std::holds_alternative<APThickeningRecipe>(ap.recipe));
  const auto& r = std::get<APThickeningRecipe>(ap.recipe);
  CHECK(r.k == 2);
  CHECK(r.x == q(3, 20));
  CHECK(r.eps == q(1, 20));
  CHECK(ap.set.intervals() == ivs({{q(0), q(3, 20)}, {q(1, 4), q(3, 10)}}));

  auto iv = pair_witness(q(3, 10), q(3, 5));
  CHECK(std::holds_alternative<IntervalUnionRecipe>(iv.recipe));
  CHECK(iv.set.intervals() == ivs({{q(0), q(3, 10)}}));

  auto ch = pair_witness(q(1, 10), q(4, 5));
  REQUIRE(std::holds_alternative<CantorHybridRecipe>(ch.recipe));
  CHECK(std::get<CantorHybridRecipe>(ch.recipe).depth == 4);
  CHECK(sumset_profile(ch.set, 2) == std::vector<Rational>{q(1, 10), q(4, 5)});
  CHECK(std::get<TorusSet>(materialize(ch.recipe)) == ch.set);

  CHECK(pair_witness(q(1), q(1)).set.is_full());
  CHECK(pair_witness(q(3, 5), q(1)).set.intervals() == ivs({{q(0), q(3, 5)}}));
  CHECK_THROWS_AS(pair_witness(q(1, 5), q(1, 3)), NotApplicable);
  CHECK_THROWS_AS(pair_witness(q(0), q(1, 3)), NotApplicable);
}

TEST_CASE("pair witnesses verify on a grid and AP recipes never wrap") {
  int count = 0;
  for (int q1 = 1; q1 <= 18; ++q1) {
    for (int p1 = 1; p1 <= q1; ++p1) {
      if (std::gcd(p1, q1) != 1) continue;
      for (int q2 = 1; q2 <= 18; ++q2) {
        for (int p2 = 1; p2 <= q2; ++p2) {
          if (std::gcd(p2, q2) != 1) continue;
          Rational a = q(p1, q1), b = q(p2, q2);
          if (b < std::min(Rational(2 * a), Rational(1))) continue;
          auto w = pair_witness(a, b);
          CHECK(sumset_profile(w.set, 2) == std::vector<Rational>{a, b});
          if (auto* ap = std::get_if<APThickeningRecipe>(&w.recipe)) {
            CHECK(2 * ap->k * ap->x <= 1);
            CHECK(ap->eps > 0);
            CHECK(ap->eps <= ap->x / 2);
          }
          ++count;
        }
      }
    }
  }
  CHECK(count > 1000);
}

TEST_CASE("Cantor approximants") {
  CHECK(cantor_approx(3, 1) == RawIntervalList{{q(0), q(1, 3)}, {q(2, 3), q(1)}});
  CHECK(cantor_approx(3, 2) ==
        RawIntervalList{{q(0), q(1, 9)}, {q(2, 9), q(1, 3)}, {q(2, 3), q(7, 9)}, {q(8, 9), q(1)}});
  CHECK(cantor_approx(4, 1) == RawIntervalList{{q(0), q(1, 4)}, {q(3, 4), q(1)}});
  CHECK(cantor_approx(5, 0) == RawIntervalList{{q(0), q(1)}});
  CHECK_THROWS_AS(cantor_approx(2, 1), InvalidInput);

  CHECK(cantor_pair_witness(q(1), 1).intervals() == ivs({{q(0), q(1, 6)}, {q(1, 3), q(1, 2)}}));
  CHECK(sumset_profile(cantor_pair_witness(q(1), 1), 2)[1] == 1);
  CHECK(cantor_pair_witness(q(4, 5), 0).intervals() == ivs({{q(0), q(2, 5)}}));
  auto c6 = cantor_pair_witness(q(4, 5), 6);
  CHECK(c6.measure() == q(128, 3645));
  CHECK(minkowski_sum(c6, c6).intervals() == ivs({{q(0), q(4, 5)}}));
}

TEST_CASE("Cantor sets: 3-fold sums of the 1/4 dissection cover the line segment") {
  for (int d = 0; d <= 6; ++d) {
    auto c = TorusSet::normalize(scale_raw(cantor_approx(4, d), q(1, 3)));
    CHECK(iterated_sumset(c, 3).is_full());
  }
}

TEST_CASE("Kneser feasibility examples") {
  auto a = kneser_feasibility(q(4, 9), q(5, 9));
  CHECK_FALSE(a.feasible);
  CHECK(a.reason == KneserCertificate::Reason::InfeasibleRange);
  CHECK(a.g0 == 9);
  auto b = kneser_feasibility(q(1, 5), q(3, 10));
  CHECK(b.feasible);
  CHECK(b.g0 == 10);
  CHECK(b.r == 2);
  auto c = kneser_feasibility(q(1, 4), q(1, 3));
  CHECK(c.feasible);
  CHECK(c.g0 == 3);
  CHECK(c.r == 1);
  CHECK(kneser_feasibility(q(1, 2), q(2, 3)).reason == KneserCertificate::Reason::InfeasibleDyadic);
  CHECK(kneser_feasibility(q(1, 3), q(1, 2)).feasible);
  auto trivial = kneser_feasibility(q(1, 4), q(2, 3));
  CHECK_FALSE(trivial.feasible);
  CHECK(trivial.reason == KneserCertificate::Reason::NotApplicable);
  CHECK_FALSE(trivial.g0.has_value());
  CHECK(to_string(KneserCertificate::Reason::InfeasibleRange) == "InfeasibleRange");
}

TEST_CASE("Kneser feasibility matches the periodic-structure search") {
  const auto& table = periodic_table();
  int checked = 0;
  for (int q1 = 1; q1 <= 12; ++q1) {
    for (int p1 = 1; p1 <= q1; ++p1) {
      if (std::gcd(p1, q1) != 1) continue;
      for (int q2 = 1; q2 <= 12; ++q2) {
        for (int p2 = 1; p2 < q2; ++p2) {
          if (std::gcd(p2, q2) != 1) continue;
          Rational a = q(p1, q1), b = q(p2, q2);
          if (!(b < 2 * a)) continue;
          auto cert = kneser_feasibility(a, b);
          CHECK_MESSAGE(cert.feasible == table.feasible(a, b), to_string(a), " ", to_string(b));
          if (cert.feasible) {
            CHECK(b == Rational(2 * *cert.r - 1, *cert.g0));
            CHECK(b / 2 < a);
            CHECK(a <= Rational(*cert.r, *cert.g0));
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("rational witnesses") {
  auto edge = rational_witness(q(2, 5), q(3, 5), 10000, 1);
  CHECK(edge.recipe.gamma == 1);
  CHECK(tail_density(edge.set, 5000, 10000) == q(2, 5));
  CHECK(tail_density(sumset(edge.set, edge.set), 5000, 10000) == q(3, 5));
  for (auto [a, b] : {std::pair{q(1, 4), q(1, 3)}, std::pair{q(1, 5), q(3, 10)}}) {
    auto w = rational_witness(a, b, 1000000, 7);
    CHECK(std::abs(tail_density_double(w.set, 500000, 1000000) - a.get_d()) <= 0.01);
    CHECK(std::abs(tail_density_double(sumset(w.set, w.set), 500000, 1000000) - b.get_d()) <= 0.01);
    CHECK(std::get<FiniteIntegerSet>(materialize(w.recipe)) == w.set);
  }
  try {
    rational_witness(q(4, 9), q(5, 9), 1000, 1);
    FAIL("expected Infeasible");
  } catch (const Infeasible& e) {
    CHECK(e.certificate.reason == KneserCertificate::Reason::InfeasibleRange);
  }
}

TEST_CASE("triplet region predicate") {
  CHECK(triplet_region_contains(q(1, 10), q(1, 4), q(39, 100)));
  CHECK_FALSE(triplet_region_contains(q(1, 10), q(1, 4), q(1, 2)));
  CHECK(triplet_region_contains(q(1, 10), q(3, 10), q(3, 5)));
  CHECK(triplet_region_contains(q(1, 10), q(1, 5), q(3, 10)));
  CHECK_FALSE(triplet_region_contains(q(1, 10), q(1, 4), q(7, 20)));
  CHECK(triplet_region_closure_contains(q(1, 10), q(1, 4), q(2, 5)));
  CHECK_FALSE(triplet_region_contains(q(1, 10), q(1, 4), q(2, 5)));
  CHECK_THROWS(triplet_region_contains(q(1, 2), q(1), q(1)));
}

TEST_CASE("triplet witnesses") {
  auto w = triplet_witness(q(1, 10), q(1, 4), q(39, 100));
  CHECK(w.set.intervals() == ivs({{q(0), q(2, 25)}, {q(11, 100), q(13, 100)}}));
  CHECK(w.branch == "2a(i)");
  auto d = triplet_witness(q(1, 10), q(1, 5), q(3, 10));
  CHECK(d.set.intervals() == ivs({{q(0), q(1, 10)}}));
  CHECK_THROWS_AS(triplet_witness(q(1, 10), q(1, 4), q(3, 8)), NoTwoIntervalWitness);
  auto b3 = triplet_witness(q(1, 10), q(3, 10), q(3, 5));
  CHECK(sumset_profile(b3.set, 3) == std::vector<Rational>{q(1, 10), q(3, 10), q(3, 5)});
}

TEST_CASE("region scan stays inside the closure") {
  auto d3 = region_scan(3);
  bool found = false;
  for (const auto& r : d3) {
    if (r.profile == std::vector<Rational>{q(1, 3), q(2, 3), q(1)}) found = true;
  }
  CHECK(found);
  auto d12 = region_scan(12);
  bool has = false;
  for (const auto& r : d12) {
    if (r.x == q(1, 12) && r.y == q(1, 6) && r.z == q(1, 4)) {
      has = true;
      CHECK(r.in_region);
      auto a = TorusSet::normalize({{q(0), q(1, 12)}, {q(1, 6), q(1, 4)}});
      CHECK(r.profile == sumset_profile(a, 3));
    }
    if (r.x > 0) CHECK(triplet_region_closure_contains(r.profile[0], r.profile[1], r.profile[2]));
  }
  CHECK(has);
}

TEST_CASE("U progressions") {
  CHECK(u_progression(3) == std::vector<std::uint64_t>{0, 1, 3});
  CHECK(u_sumset_size(3, 2) == 6);
  CHECK(u_sumset_size(3, 3) == 9);
  CHECK(u_progression(4) == std::vector<std::uint64_t>{0, 1, 2, 4});
  CHECK(u_sumset_size(4, 2) == 8);
  for (int r = 3; r <= 9; ++r) {
    for (int j = 1; j <= 6; ++j) CHECK(u_sumset_size(r, j) == static_cast<std::uint64_t>(j * r));
  }
  CHECK_THROWS(u_progression(2));
}

TEST_CASE("floor scaling and dilation") {
  auto s2 = FixedPointReal::sqrt2();
  auto a = FiniteIntegerSet::from_members(6, std::vector<std::uint64_t>{1, 3, 5});
  CHECK(floor_scale(a, s2).members() == std::vector<std::uint64_t>{1, 4, 7});
  CHECK(floor_scale(a, s2).horizon() == 8);
  auto b = FiniteIntegerSet::from_members(4, std::vector<std::uint64_t>{1, 2, 3});
  CHECK(dilate(b, 5).members() == std::vector<std::uint64_t>{5, 10, 15});
  CHECK_THROWS(floor_scale(a, FixedPointReal::parse("1")));
  CHECK(floor_additivity_violations({1, 3, 5, 6}, s2, 1) == 0);
  CHECK(floor_additivity_violations({1, 2}, s2, 1) > 0);
}

}
