#include "sumdens/random_sets.hpp"

#include <chrono>
#include <cmath>

#include "fill_bits.hpp"
#include "sumdens/equidistribution.hpp"
#include "sumdens/philox.hpp"
#include "sumdens/quadrature.hpp"
#include "sumdens/sumset_kernels.hpp"

namespace sumdens {

namespace {

double draw(std::uint64_t seed, RandomStream stream, std::uint64_t m) {
  return Philox4x32::uniform(seed, static_cast<std::uint64_t>(stream), m);
}

}  // namespace

double random_uniform(std::uint64_t seed, RandomStream stream, std::uint64_t index) {
  return draw(seed, stream, index);
}

std::vector<std::uint64_t> sample_integers(std::uint64_t lo, std::uint64_t hi, std::size_t count,
                                           std::uint64_t seed) {
  if (lo >= hi) throw InvalidInput("sample_integers needs lo < hi");
  const double width = static_cast<double>(hi - lo);
  std::vector<std::uint64_t> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto off = static_cast<std::uint64_t>(draw(seed, RandomStream::Sampling, i) * width);
    out[i] = lo + std::min(off, hi - lo - 1);
  }
  return out;
}

FiniteIntegerSet sample_pseudo_powers(const SamplerConfig& cfg) {
  if (cfg.k < 1) throw InvalidInput("sampler needs k >= 1");
  if (cfg.horizon < 2) throw InvalidInput("sampler needs horizon >= 2");
  if (!(cfg.c >= 0)) throw InvalidInput("sampler needs c >= 0");
  const double expo = -1.0 + 1.0 / cfg.k;
  return detail::fill_by_predicate(cfg.horizon, [&](std::uint64_t m) {
    double p = std::min(1.0, cfg.c * std::pow(static_cast<double>(m), expo));
    return draw(cfg.seed, RandomStream::PseudoPower, m) < p;
  });
}

FiniteIntegerSet restrict_to_T(const FiniteIntegerSet& s, int k, const FixedPointReal& theta) {
  return s.intersect(beatty_T(k, theta, s.horizon()));
}

FiniteIntegerSet sample_pair_set(const FixedPointReal& theta, const Rational& beta, std::uint64_t horizon,
                                 std::uint64_t seed) {
  if (beta < 0 || beta > 1) throw InvalidInput("pair sampler needs 0 <= beta <= 1");
  FiniteIntegerSet t = beatty_T(1, theta, horizon);
  if (beta == 1) return t;
  const double b = beta.get_d();
  return detail::fill_by_predicate(horizon, [&](std::uint64_t n) {
    if (!t.contains(n)) return false;
    double p = b > 0 ? b : std::pow(static_cast<double>(n), -0.2);
    return draw(seed, RandomStream::PairSet, n) < p;
  });
}

std::uint64_t coverage_gap(const FiniteIntegerSet& s2, const FiniteIntegerSet& x, std::uint64_t n0) {
  if (s2.horizon() != x.horizon()) throw InvalidInput("horizon mismatch");
  if (n0 >= x.horizon()) throw InvalidInput("coverage_gap needs n0 < N");
  std::vector<std::uint64_t> missing(x.words().size());
  for (std::size_t w = 0; w < missing.size(); ++w) missing[w] = x.words()[w] & ~s2.words()[w];
  return kernels::count_range(missing, n0, x.horizon());
}

double predicted_kA_density(const SamplerConfig& cfg, double tol) {
  const int k = cfg.k;
  if (cfg.theta.is_integer()) {
    return 1.0 - std::exp(-std::pow(cfg.c, k) * lambda_k(k).value);
  }
  return static_cast<double>(k) / (k + 1) - big_f(k, cfg.c, tol);
}

SimulationReport density_report(const SamplerConfig& cfg) {
  if (cfg.k < 1 || cfg.k > 4) throw InvalidInput("density_report supports 1 <= k <= 4");
  if (cfg.horizon < 100000) throw InvalidInput("density_report needs horizon >= 100000");
  auto start = std::chrono::steady_clock::now();

  SimulationReport r;
  r.config = cfg;
  const std::uint64_t n = cfg.horizon;
  r.window_lo = n / 2;
  r.window_hi = n;
  const int k = cfg.k;

  FiniteIntegerSet a = restrict_to_T(sample_pseudo_powers(cfg), k, cfg.theta);
  r.sample_size = a.size();
  r.lambda = lambda_k(k).value;
  const double kd = static_cast<double>(k) / (k + 1);
  const double predicted_k = predicted_kA_density(cfg);
  r.big_f = cfg.theta.is_integer() ? kd - predicted_k : big_f(k, cfg.c, 1e-10);
  r.beta_inside_kT = 1.0 - r.big_f / kd;

  const std::uint64_t m = a.min_member();
  const bool translatable = m < n && (k + 1) * m < r.window_hi - r.window_lo;
  const std::uint64_t t_hi = translatable ? n - (k + 1) * m : 0;

  FiniteIntegerSet cur = a;
  for (int j = 1; j <= k + 1; ++j) {
    if (j > 1) cur = sumset(cur, a);
    SumsetDensity d;
    d.j = j;
    d.density = tail_density_double(cur, r.window_lo, r.window_hi);
    d.predicted = j < k ? 0.0 : (j == k ? predicted_k : 1.0);
    d.deviation = d.density - d.predicted;
    r.sumsets.push_back(d);
    if (translatable) r.translated_counts.push_back(cur.count_in(r.window_lo + j * m, t_hi + j * m));
  }
  for (std::size_t i = 1; i < r.translated_counts.size(); ++i) {
    if (r.translated_counts[i] < r.translated_counts[i - 1]) r.translated_monotone = false;
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double s_k_bruteforce(int k, const FiniteIntegerSet& t, std::uint64_t n) {
  if (k != 2 && k != 3) throw InvalidInput("s_k_bruteforce supports k = 2 and k = 3");
  if (k == 2 && n > 1000000) throw InvalidInput("s_k_bruteforce(k=2) supports n <= 10^6");
  if (k == 3 && n > 20000) throw InvalidInput("s_k_bruteforce(k=3) supports n <= 2*10^4");
  if (t.horizon() <= n) throw InvalidInput("T horizon must cover n");
  long double total = 0.0L;
  if (k == 2) {
    for (std::uint64_t u1 = 1; 2 * u1 < n; ++u1) {
      std::uint64_t u2 = n - u1;
      if (t.contains(u1) && t.contains(u2)) total += 1.0L / std::sqrt(static_cast<long double>(u1) * u2);
    }
    return static_cast<double>(total);
  }
  for (std::uint64_t u1 = 1; 3 * u1 < n; ++u1) {
    if (!t.contains(u1)) continue;
    for (std::uint64_t u2 = u1 + 1; u1 + 2 * u2 < n; ++u2) {
      std::uint64_t u3 = n - u1 - u2;
      if (t.contains(u2) && t.contains(u3)) {
        total += std::pow(static_cast<long double>(u1) * u2 * u3, -2.0L / 3.0L);
      }
    }
  }
  return static_cast<double>(total);
}

double s_k_bruteforce(int k, const FixedPointReal& theta, std::uint64_t n) {
  if (k != 2 && k != 3) throw InvalidInput("s_k_bruteforce supports k = 2 and k = 3");
  if (n < 1) return 0.0;
  return s_k_bruteforce(k, beatty_T(k, theta, n + 1), n);
}

namespace {

void check_j_domain(double alpha, double beta, std::uint64_t n) {
  if (!(alpha > 0 && alpha < 1) || !(beta > 0) || n < 2) {
    throw InvalidInput("J_N(alpha, beta) needs 0 < alpha < 1, beta > 0, N >= 2");
  }
}

}  // namespace

double j_sum(double alpha, double beta, std::uint64_t n) {
  check_j_domain(alpha, beta, n);
  const long double nl = static_cast<long double>(n);
  long double total = 0.0L;
  for (std::uint64_t x = 1; x < n; ++x) {
    long double xl = static_cast<long double>(x);
    total += std::pow(xl, -static_cast<long double>(alpha)) * std::pow(nl - xl, -static_cast<long double>(beta));
  }
  return static_cast<double>(total);
}

double j_asymptote(double alpha, double beta, std::uint64_t n) {
  check_j_domain(alpha, beta, n);
  const double nd = static_cast<double>(n);
  if (beta < 1) return beta_ref(1 - alpha, 1 - beta).value * std::pow(nd, 1 - alpha - beta);
  if (beta == 1) return std::pow(nd, -alpha) * std::log(nd);
  return zeta_ref(beta).value * std::pow(nd, -alpha);
}

}  // namespace sumdens
