#include "sumdens/constructions.hpp"

#include <algorithm>
#include <functional>

#include "sumdens/random_sets.hpp"

namespace sumdens {

namespace {

Rational rmax(std::initializer_list<Rational> xs) { return std::max(xs); }
Rational rmin(std::initializer_list<Rational> xs) { return std::min(xs); }

// s * C(depth): left endpoints are s * n / q^depth with base-q digits in {0, q-1}, all of
// length s / q^depth.
RawIntervalList scaled_cantor(int q, int depth, const Rational& s) {
  BigInt den = s.get_den();
  BigInt qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(depth));
  den *= qd;
  std::vector<BigInt> lefts{BigInt(0)};
  for (int d = 0; d < depth; ++d) {
    BigInt step;
    mpz_ui_pow_ui(step.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(depth - 1 - d));
    step *= q - 1;
    std::vector<BigInt> next;
    next.reserve(lefts.size() * 2);
    for (const auto& l : lefts) {
      next.push_back(l);
      next.push_back(l + step);
    }
    lefts = std::move(next);
  }
  RawIntervalList out;
  out.reserve(lefts.size());
  const BigInt& num = s.get_num();
  for (const auto& l : lefts) {
    Rational lo(l * num, den), hi((l + 1) * num, den);
    lo.canonicalize();
    hi.canonicalize();
    out.push_back({std::move(lo), std::move(hi)});
  }
  return out;
}

// [0, a] ∪ K for K = (β/2) C(depth)
TorusSet cantor_hybrid_set(const Rational& a, const TorusSet& k) {
  if (!(a > 0)) return k;
  RawIntervalList raw;
  raw.reserve(k.intervals().size() + 1);
  raw.push_back({Rational(0), a});
  for (const auto& iv : k.intervals()) raw.push_back({iv.lo, iv.hi});
  return TorusSet::normalize(raw);
}

TorusSet cantor_hybrid_set(const Rational& a, const Rational& beta, int depth) {
  return cantor_hybrid_set(a, cantor_pair_witness(beta, depth));
}

TorusSet ap_thickening_set(int k, const Rational& x, const Rational& eps) {
  RawIntervalList raw{{Rational(0), x}};
  for (int i = 2; i <= k; ++i) raw.push_back({i * x - eps, i * x});
  return TorusSet::normalize(raw);
}

bool has_profile(const TorusSet& a, const std::vector<Rational>& target) {
  return sumset_profile(a, static_cast<int>(target.size())) == target;
}

std::optional<APThickeningRecipe> choose_ap(const Rational& alpha, const Rational& beta) {
  const Rational excess = beta - 2 * alpha;
  // 2kx <= 1 forces k (1 - 2(β - 2α)) >= 1
  if (2 * excess >= 1) return std::nullopt;
  BigInt k_pos = floor(Rational((beta - alpha) / alpha)) + 1;  // ε > 0
  BigInt k_wrap = ceil(Rational(1 / (1 - 2 * excess)));        // 2kx <= 1
  BigInt k = std::max({BigInt(2), k_pos, k_wrap});
  // ε <= x/2 is k (4α - β) <= β
  if (Rational(k) * (4 * alpha - beta) > beta) return std::nullopt;
  if (!k.fits_sint_p()) return std::nullopt;
  APThickeningRecipe r;
  r.k = static_cast<int>(k.get_si());
  r.x = excess / (r.k - 1);
  r.eps = (alpha - r.x) / (r.k - 1);
  if (!(r.eps > 0) || r.eps > r.x / 2 || 2 * r.k * r.x > 1) return std::nullopt;
  return r;
}

// Also returns K = (β/2) C(depth) through `k_out`.
CantorHybridRecipe choose_cantor(const Rational& alpha, const Rational& beta, TorusSet& k_out) {
  CantorHybridRecipe r;
  r.beta = beta;
  Rational mu = beta / 2;
  while (!(mu < alpha)) {
    mu = mu * Rational(2, 3);
    ++r.depth;
  }
  k_out = cantor_pair_witness(beta, r.depth);
  const auto& iv = k_out.intervals();
  // μ([0, a] ∪ K) = a + (measure of K right of a) grows with slope 1 in gaps of K and is
  // flat inside K; take the smallest a reaching α.
  std::vector<Rational> tail(iv.size() + 1, Rational(0));
  for (std::size_t i = iv.size(); i-- > 0;) tail[i] = tail[i + 1] + iv[i].length();
  Rational gap_lo(0);
  for (std::size_t i = 0; i <= iv.size(); ++i) {
    Rational a = alpha - tail[i];
    bool fits = a >= gap_lo && (i == iv.size() ? a <= beta / 2 : a <= iv[i].lo);
    if (fits) {
      r.a = a;
      return r;
    }
    if (i < iv.size()) gap_lo = iv[i].hi;
  }
  throw std::logic_error("cantor hybrid: no solution for a");
}

FiniteIntegerSet residue_set(int g, int r, const Rational& gamma, std::uint64_t horizon, std::uint64_t seed) {
  const std::uint64_t gu = static_cast<std::uint64_t>(g);
  const std::uint64_t base_horizon = (horizon + gu - 1) / gu;
  FiniteIntegerSet base = gamma == 1
                              ? FiniteIntegerSet::range(base_horizon, 0, base_horizon)
                              : sample_pair_set(FixedPointReal::from_rational(Rational(1)), gamma,
                                                std::max<std::uint64_t>(base_horizon, 2), seed);
  FiniteIntegerSet a(horizon);
  for (auto b : base.members()) {
    for (int x = 0; x < r; ++x) a.insert(static_cast<std::uint64_t>(x) + gu * b);
  }
  return a;
}

}  // namespace

std::string recipe_kind(const WitnessRecipe& recipe) {
  static const char* names[] = {"IntervalUnion", "APThickening", "CantorHybrid", "RationalResidue", "PseudoPower"};
  return names[recipe.index()];
}

std::variant<TorusSet, FiniteIntegerSet> materialize(const WitnessRecipe& recipe) {
  if (auto* r = std::get_if<IntervalUnionRecipe>(&recipe)) return r->set;
  if (auto* r = std::get_if<APThickeningRecipe>(&recipe)) return ap_thickening_set(r->k, r->x, r->eps);
  if (auto* r = std::get_if<CantorHybridRecipe>(&recipe)) return cantor_hybrid_set(r->a, r->beta, r->depth);
  if (auto* r = std::get_if<RationalResidueRecipe>(&recipe)) {
    return residue_set(r->g, r->r, r->gamma, r->horizon, r->seed);
  }
  const auto& p = std::get<PseudoPowerRecipe>(recipe);
  SamplerConfig cfg;
  cfg.k = p.k;
  cfg.c = p.c;
  cfg.theta = FixedPointReal::parse(p.theta);
  cfg.horizon = p.horizon;
  cfg.seed = p.seed;
  return restrict_to_T(sample_pseudo_powers(cfg), p.k, cfg.theta);
}

PairWitness pair_witness(const Rational& alpha, const Rational& beta) {
  if (alpha <= 0) throw NotApplicable("alpha = 0 has no interval-union witness; use cantor_pair_witness");
  if (alpha > 1 || beta > 1) throw InvalidInput("pair_witness needs alpha, beta <= 1");
  const Rational lower = std::min(Rational(2 * alpha), Rational(1));
  if (beta < lower) throw NotApplicable("beta < min(2 alpha, 1); see kneser_feasibility");
  const std::vector<Rational> target{alpha, beta};

  if (beta == lower) {
    TorusSet a = alpha == 1 ? TorusSet::full_circle() : TorusSet::interval(Rational(0), alpha);
    return {IntervalUnionRecipe{a}, a};
  }
  if (auto ap = choose_ap(alpha, beta)) {
    TorusSet a = ap_thickening_set(ap->k, ap->x, ap->eps);
    if (has_profile(a, target)) return {*ap, a};
  }
  TorusSet k;
  CantorHybridRecipe ch = choose_cantor(alpha, beta, k);
  TorusSet a = cantor_hybrid_set(ch.a, k);
  if (!has_profile(a, target)) throw std::logic_error("pair_witness: construction failed to verify");
  return {ch, a};
}

RawIntervalList cantor_approx(int ratio_denom, int depth) {
  if (ratio_denom < 3) throw InvalidInput("cantor_approx needs ratio_denom >= 3");
  if (depth < 0) throw InvalidInput("cantor_approx needs depth >= 0");
  return scaled_cantor(ratio_denom, depth, Rational(1));
}

TorusSet cantor_pair_witness(const Rational& beta, int depth) {
  if (beta <= 0 || beta > 1) throw InvalidInput("cantor_pair_witness needs 0 < beta <= 1");
  if (depth < 0) throw InvalidInput("cantor_pair_witness needs depth >= 0");
  return TorusSet::normalize(scaled_cantor(3, depth, beta / 2));
}

std::string to_string(KneserCertificate::Reason reason) {
  switch (reason) {
    case KneserCertificate::Reason::Feasible: return "Feasible";
    case KneserCertificate::Reason::InfeasibleDyadic: return "InfeasibleDyadic";
    case KneserCertificate::Reason::InfeasibleRange: return "InfeasibleRange";
    case KneserCertificate::Reason::NotApplicable: return "NotApplicable";
  }
  return "?";
}

KneserCertificate kneser_feasibility(const Rational& alpha, const Rational& beta) {
  if (alpha <= 0 || alpha > 1 || beta <= 0 || beta >= 1) {
    throw InvalidInput("kneser_feasibility needs 0 < alpha <= 1 and 0 < beta < 1");
  }
  KneserCertificate cert;
  if (beta >= 2 * alpha) return cert;
  // gβ is an odd integer only for g a multiple of den(β), and then only if num(β) is odd
  if (dyadic_valuation(beta) > 0) {
    cert.reason = KneserCertificate::Reason::InfeasibleDyadic;
    return cert;
  }
  const BigInt& q = beta.get_den();
  const BigInt& p = beta.get_num();
  if (!q.fits_slong_p()) throw InvalidInput("beta denominator too large");
  cert.g0 = q.get_si();
  cert.r = BigInt((p + 1) / 2).get_si();
  cert.feasible = alpha <= make_rational(*cert.r, *cert.g0);
  cert.reason = cert.feasible ? KneserCertificate::Reason::Feasible : KneserCertificate::Reason::InfeasibleRange;
  return cert;
}

RationalWitness rational_witness(const Rational& alpha, const Rational& beta, std::uint64_t horizon,
                                 std::uint64_t seed) {
  KneserCertificate cert = kneser_feasibility(alpha, beta);
  if (!cert.feasible) throw Infeasible("(alpha, beta) is not a feasible density pair: " + to_string(cert.reason), cert);
  RationalResidueRecipe recipe;
  recipe.g = static_cast<int>(*cert.g0);
  recipe.r = static_cast<int>(*cert.r);
  recipe.gamma = alpha * recipe.g / recipe.r;
  recipe.seed = seed;
  recipe.horizon = horizon;
  return {cert, recipe, residue_set(recipe.g, recipe.r, recipe.gamma, horizon, seed)};
}

namespace {

bool in_unit_cube(const Rational& a, const Rational& b, const Rational& c) {
  return a >= 0 && a <= 1 && b >= 0 && b <= 1 && c >= 0 && c <= 1;
}

void check_triplet_alpha(const Rational& alpha) {
  if (alpha < 0 || alpha > Rational(1, 3)) throw InvalidInput("triplet region needs 0 <= alpha <= 1/3");
}

}  // namespace

bool triplet_region_contains(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  check_triplet_alpha(alpha);
  if (!in_unit_cube(alpha, beta, gamma)) return false;
  const Rational three_halves = 3 * beta / 2;
  bool main = beta >= 2 * alpha && beta <= 3 * alpha && gamma >= three_halves && gamma < 2 * beta - alpha;
  bool triple = beta == 3 * alpha && gamma >= three_halves && gamma <= 2 * beta;
  bool single = beta == 2 * alpha && gamma == 3 * alpha;
  return main || triple || single;
}

bool triplet_region_closure_contains(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  check_triplet_alpha(alpha);
  if (!in_unit_cube(alpha, beta, gamma)) return false;
  const Rational three_halves = 3 * beta / 2;
  bool main = beta >= 2 * alpha && beta <= 3 * alpha && gamma >= three_halves && gamma <= 2 * beta - alpha;
  bool triple = beta == 3 * alpha && gamma >= three_halves && gamma <= 2 * beta;
  return main || triple;
}

namespace {

TorusSet two_intervals(const Rational& x, const Rational& y, const Rational& z) {
  RawIntervalList raw;
  if (x > 0) raw.push_back({Rational(0), x});
  if (z > y) raw.push_back({y, z});
  return TorusSet::normalize(raw);
}

std::optional<Rational> midpoint(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return std::nullopt;
  return (lo + hi) / 2;
}

}  // namespace

TripletWitness triplet_witness(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  if (!triplet_region_contains(alpha, beta, gamma)) {
    throw NotApplicable("(alpha, beta, gamma) is outside the two-interval triplet region");
  }
  const std::vector<Rational> target{alpha, beta, gamma};
  const Rational third(1, 3);
  const Rational& a = alpha;
  const Rational& b = beta;
  const Rational& g = gamma;

  // Each branch supplies (x, y, z) and the strict inequalities defining its case.
  using Check = std::function<bool(const Rational&, const Rational&, const Rational&)>;
  auto attempt = [&](const char* name, const std::optional<Rational>& xo, const std::function<Rational(const Rational&)>& yf,
                     const std::function<Rational(const Rational&)>& zf, const Check& ok) -> std::optional<TripletWitness> {
    if (!xo) return std::nullopt;
    const Rational& x = *xo;
    Rational y = yf(x), z = zf(x);
    if (!(x > 0 && x < y && y < z && z <= third)) return std::nullopt;
    if (!ok(x, y, z)) return std::nullopt;
    TorusSet set = two_intervals(x, y, z);
    if (!has_profile(set, target)) return std::nullopt;
    return TripletWitness{name, x, y, z, set};
  };

  if (b == 2 * a && g == 3 * a && a > 0) {
    TorusSet set = TorusSet::interval(Rational(0), a);
    if (has_profile(set, target)) return {"single", a, a, a, set};
  }

  std::vector<std::function<std::optional<TripletWitness>()>> branches;
  // 2A has two components: (0, x+z) ∪ (2y, 2z), 3A overlaps to (0, 3z)
  branches.push_back([&] {
    return attempt("2a(i)", 2 * a - b + g / 3, [&](const Rational&) -> Rational { return a - b + 2 * g / 3; }, [&](const Rational&) -> Rational { return g / 3; },
                   [](const Rational& x, const Rational& y, const Rational& z) {
                     return 2 * x > y && x + z < 2 * y && 2 * z + x > 3 * y && 3 * x > y && 2 * x + z > 2 * y;
                   });
  });
  // 2A = (0, 2x) ∪ (y, 2z), 3A = (0, 3z)
  branches.push_back([&] {
    return attempt("2b(i)", b - a - g / 3, [&](const Rational&) -> Rational { return b - 2 * a; }, [&](const Rational&) -> Rational { return g / 3; },
                   [](const Rational& x, const Rational& y, const Rational& z) {
                     return 2 * x < y && y < 3 * x && x + z > 2 * y && 2 * x + z > 2 * y && 2 * z + x > 3 * y;
                   });
  });
  if (g == 2 * b - a) {
    // 2a(ii): parametrized by y; x = (3α - β + y)/2, z = (β - α + y)/2
    branches.push_back([&]() -> std::optional<TripletWitness> {
      auto y = midpoint(rmax({a, (a + b) / 3, 3 * b - 9 * a}), rmin({5 * a - b, b - a, Rational(2, 3) - b + a}));
      if (!y) return std::nullopt;
      Rational x = (3 * a - b + *y) / 2;
      Rational yv = *y;
      return attempt("2a(ii)", x, [yv](const Rational&) -> Rational { return yv; }, [&, yv](const Rational&) -> Rational { return (b - a + yv) / 2; },
                     [](const Rational& x, const Rational& y, const Rational& z) {
                       return 2 * x > y && x + z < 2 * y && 2 * z + x < 3 * y && 3 * x > y && 2 * x + z > 2 * y;
                     });
    });
    // 2b(ii): y = β - 2α, z = β - α - x
    branches.push_back([&] {
      auto x = midpoint(rmax({Rational(0), b - a - third}), rmin({(b - 2 * a) / 3, 4 * a - b, a}));
      return attempt("2b(ii)", x, [&](const Rational&) -> Rational { return b - 2 * a; }, [&](const Rational& x) -> Rational { return b - a - x; },
                     [](const Rational& x, const Rational& y, const Rational& z) {
                       return 2 * x < y && x + z > 2 * y && y > 3 * x && 2 * x + z > 2 * y && 2 * z + x > 3 * y;
                     });
    });
  }
  if (b == 3 * a) {
    // 2A has three components: 2x < y, x + z < 2y
    auto three_comp = [](const Rational& x, const Rational& y, const Rational& z) { return 2 * x < y && x + z < 2 * y; };
    if (g == 6 * a) {
      branches.push_back([&] {
        auto y = midpoint(3 * a / 2, third - a / 2);
        if (!y) return std::optional<TripletWitness>{};
        Rational yv = *y;
        return attempt("3a", a / 2, [yv](const Rational&) -> Rational { return yv; }, [&, yv](const Rational&) -> Rational { return yv + a / 2; },
                       [&](const Rational& x, const Rational& y, const Rational& z) {
                         return three_comp(x, y, z) && 3 * x < y && 2 * x + z < 2 * y && 2 * z + x < 3 * y;
                       });
      });
    }
    // 3b: 3A connected, γ = 3z
    branches.push_back([&] {
      Rational z = g / 3;
      auto x = midpoint(rmax({Rational(0), 2 * a - z, (z - a) / 2}), rmin({z - a, (3 * a - z) / 2, a}));
      return attempt("3b", x, [&, z](const Rational& x) -> Rational { return x + z - a; }, [z](const Rational&) -> Rational { return z; },
                     [&](const Rational& x, const Rational& y, const Rational& z) {
                       return three_comp(x, y, z) && 3 * x > y && 2 * x + z > 2 * y && 2 * z + x > 3 * y;
                     });
    });
    // 3c(i): only the first gap of 3A is overcome, γ = 6α - 3x + y
    branches.push_back([&] {
      auto x = midpoint(rmax({Rational(0), 6 * a - g, (7 * a - g) / 3, (7 * a - g) / 2, (8 * a - g) / 4}),
                        rmin({a, (third - g + 5 * a) / 2}));
      return attempt("3c(i)", x, [&](const Rational& x) -> Rational { return g - 6 * a + 3 * x; }, [&](const Rational& x) -> Rational { return g - 5 * a + 2 * x; },
                     [&](const Rational& x, const Rational& y, const Rational& z) {
                       return three_comp(x, y, z) && 3 * x > y && 2 * x + z < 2 * y && 2 * z + x < 3 * y;
                     });
    });
  }
  for (auto& branch : branches) {
    if (auto w = branch()) return *w;
  }
  throw NoTwoIntervalWitness("no two-interval set realizes (" + to_string(a) + ", " + to_string(b) + ", " +
                             to_string(g) + ")");
}

std::vector<RegionScanRow> region_scan(int denominator, int kmax) {
  if (denominator < 3) throw InvalidInput("region_scan needs D >= 3");
  if (kmax < 3) throw InvalidInput("region_scan needs kmax >= 3");
  const int top = denominator / 3;
  std::vector<std::array<int, 3>> grid;
  for (int i = 0; i <= top; ++i) {
    for (int j = i; j <= top; ++j) {
      for (int l = j; l <= top; ++l) grid.push_back({i, j, l});
    }
  }
  std::vector<RegionScanRow> rows(grid.size());
  const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const auto& c = grid[static_cast<std::size_t>(idx)];
    RegionScanRow row;
    row.x = Rational(c[0], denominator);
    row.y = Rational(c[1], denominator);
    row.z = Rational(c[2], denominator);
    row.x.canonicalize();
    row.y.canonicalize();
    row.z.canonicalize();
    row.profile = sumset_profile(two_intervals(row.x, row.y, row.z), kmax);
    row.in_region = triplet_region_closure_contains(row.profile[0], row.profile[1], row.profile[2]);
    rows[static_cast<std::size_t>(idx)] = std::move(row);
  }
  return rows;
}

std::vector<std::uint64_t> u_progression(int r) {
  if (r < 3) throw InvalidInput("u_progression needs r >= 3");
  std::vector<std::uint64_t> u;
  for (int i = 0; i <= r - 2; ++i) u.push_back(static_cast<std::uint64_t>(i));
  u.push_back(static_cast<std::uint64_t>(r));
  return u;
}

std::uint64_t u_sumset_size(int r, int j) {
  if (j < 1) throw InvalidInput("u_sumset_size needs j >= 1");
  auto u = u_progression(r);
  const std::uint64_t horizon = static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(r) + 1;
  return iterated_sumset(FiniteIntegerSet::from_members(horizon, u), j, KernelMode::Serial).size();
}

FiniteIntegerSet floor_scale(const FiniteIntegerSet& a, const FixedPointReal& theta) {
  bool above_one = theta.integer_part() > 1 || (theta.integer_part() == 1 && !(theta.is_integer()));
  if (!above_one) throw InvalidInput("floor_scale needs theta > 1");
  const BigInt top = theta.floor_mul(a.horizon() - 1);
  if (!top.fits_ulong_p()) throw InvalidInput("floor_scale horizon overflow");
  FiniteIntegerSet out(top.get_ui() + 1);
  for (auto m : a.members()) out.insert(theta.floor_mul(m).get_ui());
  return out;
}

FiniteIntegerSet dilate(const FiniteIntegerSet& a, std::uint64_t q) {
  if (q < 1) throw InvalidInput("dilate needs q >= 1");
  FiniteIntegerSet out(q * (a.horizon() - 1) + 1);
  for (auto m : a.members()) out.insert(q * m);
  return out;
}

std::uint64_t floor_additivity_violations(const std::vector<std::uint64_t>& members, const FixedPointReal& theta,
                                          int k) {
  if (k < 1) throw InvalidInput("floor additivity needs k >= 1");
  std::vector<BigInt> floors;
  for (auto m : members) floors.push_back(theta.floor_mul(m));
  std::uint64_t violations = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k + 1), 0);
  const std::size_t n = members.size();
  if (n == 0) return 0;
  // nondecreasing index tuples enumerate multisets
  while (true) {
    std::uint64_t sum = 0;
    BigInt floor_sum = 0;
    for (auto i : idx) {
      sum += members[i];
      floor_sum += floors[i];
    }
    if (floor_sum != theta.floor_mul(sum)) ++violations;
    std::size_t p = idx.size();
    while (p > 0 && idx[p - 1] == n - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < idx.size(); ++q) idx[q] = idx[p - 1];
  }
  return violations;
}

}  // namespace sumdens
