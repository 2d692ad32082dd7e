#include "sumdens/equidistribution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fill_bits.hpp"

namespace sumdens {

namespace {

// frac(n x) in double; exact reduction for rational x so that integers land on 0.
double frac_double(const FixedPointReal& x, std::uint64_t n) {
  if (const auto& q = x.rational()) {
    BigInt num = q->get_num() * BigInt(std::to_string(n));
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), q->get_den().get_mpz_t());
    return Rational(r, q->get_den()).get_d();
  }
  return x.frac(n);
}

}  // namespace

EtaSpec EtaSpec::parse(std::string_view text) {
  EtaSpec eta;
  std::string t(text);
  try {
    auto colon = t.find(':');
    if (colon == std::string::npos) {
      eta.exponent = std::stod(t);
    } else {
      eta.coefficient = std::stod(t.substr(0, colon));
      eta.exponent = std::stod(t.substr(colon + 1));
    }
  } catch (const std::logic_error&) {
    throw ParseError("bad eta spec '" + t + "', expected E or C:E");
  }
  eta.validate();
  return eta;
}

void EtaSpec::validate() const {
  if (!(coefficient >= 1.0) || !(exponent > 0.0) || !(exponent <= 0.5)) {
    throw InvalidInput("eta must satisfy eta(n) >= n^(-1/2): need coefficient >= 1 and 0 < exponent <= 1/2");
  }
}

double EtaSpec::operator()(double n) const { return coefficient * std::pow(n, -exponent); }

FiniteIntegerSet beatty_T(int k, const FixedPointReal& theta, std::uint64_t horizon) {
  if (k < 1) throw InvalidInput("beatty_T needs k >= 1");
  if (theta.is_integer()) return FiniteIntegerSet::range(horizon, 1, horizon);
  FracTester in_t(theta, Rational(0), false, Rational(1, k + 1), false);
  return detail::fill_by_predicate(horizon, in_t);
}

FiniteIntegerSet b_lambda(const TorusSet& a, const FixedPointReal& lambda, std::uint64_t horizon) {
  std::vector<FracTester> testers;
  for (const auto& iv : a.intervals()) testers.emplace_back(lambda, iv.lo, true, iv.hi, true);
  // [b, 1] without [0, a] still contains the point 0 of the circle
  if (!a.empty() && a.intervals().front().lo != 0 && a.intervals().back().hi == 1) {
    testers.emplace_back(lambda, Rational(0), true, Rational(0), true);
  }
  return detail::fill_by_predicate(horizon, [&](std::uint64_t n) {
    for (const auto& t : testers) {
      if (t(n)) return true;
    }
    return false;
  });
}

FiniteIntegerSet x_theta(const FixedPointReal& theta, const EtaSpec& eta, std::uint64_t horizon) {
  eta.validate();
  return detail::fill_by_predicate(horizon, [&](std::uint64_t n) {
    double cut = 2.0 * eta(0.5 * static_cast<double>(n));
    if (cut >= 0.5) return false;
    double f = frac_double(theta, n);
    return f > cut && f < 1.0 - cut;
  });
}

DiscrepancyProfile discrepancy_check(const FixedPointReal& theta, const TorusInterval& interval,
                                     std::uint64_t n, std::uint64_t m, std::uint64_t offset) {
  if (n < 1 || m < 1) throw InvalidInput("discrepancy_check needs N, m >= 1");
  DiscrepancyProfile p;
  p.n = n;
  p.m = m;
  p.offset = offset;
  p.theta = theta;
  p.interval = interval;

  FracTester in_i(theta, interval.lo, true, interval.hi, true);
  const bool full = interval.lo == 0 && interval.hi == 1;
  std::uint64_t hits = 0;
  for (std::uint64_t j = offset + 1; j <= offset + n; ++j) {
    if (full || in_i(j)) ++hits;
  }
  double nd = static_cast<double>(n);
  p.lhs = std::abs(static_cast<double>(hits) / nd - interval.length().get_d());

  // |Σ_{X<j<=X+N} e(j h θ)| = |sin(π N h θ) / sin(π h θ)|, independent of X
  double weighted = 0.0;
  for (std::uint64_t h = 1; h <= m; ++h) {
    double den = std::abs(std::sin(std::numbers::pi * frac_double(theta, h)));
    double term;
    if (den == 0.0) {
      term = nd;
    } else {
      double num = std::abs(std::sin(std::numbers::pi * frac_double(theta, n * h)));
      term = std::min(nd, num / den);
    }
    weighted += term / static_cast<double>(h);
  }
  p.bound = 3.0 * (1.0 / static_cast<double>(m + 1) + weighted / nd);
  return p;
}

double weyl_average(const PiecewisePolynomial& f, const FixedPointReal& theta, std::uint64_t n,
                    std::uint64_t offset) {
  if (n < 1) throw InvalidInput("weyl_average needs N >= 1");
  PiecewiseEvaluator eval(f);
  double sum = 0.0;
  for (std::uint64_t j = offset + 1; j <= offset + n; ++j) sum += eval(frac_double(theta, j));
  return sum / static_cast<double>(n);
}

}  // namespace sumdens
