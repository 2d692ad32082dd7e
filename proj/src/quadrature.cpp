#include "sumdens/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sumdens {

const GaussLegendre32& GaussLegendre32::instance() {
  static const GaussLegendre32 rule = [] {
    GaussLegendre32 r;
    constexpr int n = 32;
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int m = 2; m <= n; ++m) {
          double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      double w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.nodes[static_cast<std::size_t>(i)] = -x;
      r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
      r.weights[static_cast<std::size_t>(i)] = w;
      r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return r;
  }();
  return rule;
}

double GaussLegendre32::integrate(const std::function<double(double)>& f, double a, double b) const {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
  return sum * half;
}

namespace {

double adaptive(const std::function<double(double)>& f, double a, double b, double whole, double tol, int depth) {
  const auto& rule = GaussLegendre32::instance();
  double m = 0.5 * (a + b);
  double left = rule.integrate(f, a, m);
  double right = rule.integrate(f, m, b);
  if (std::abs(left + right - whole) <= tol || depth >= 40) return left + right;
  return adaptive(f, a, m, left, 0.5 * tol, depth + 1) + adaptive(f, m, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_piecewise(const std::function<double(double)>& f, const std::vector<double>& cuts, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (cuts.size() < 2) return 0.0;
  const auto& rule = GaussLegendre32::instance();
  const double share = tol / static_cast<double>(cuts.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    if (!(b > a)) continue;
    total += adaptive(f, a, b, rule.integrate(f, a, b), share, 0);
  }
  return total;
}

DensityDeficit::DensityDeficit(int k)
    : k_(k), lambda_(lambda_k(k)), fk_(f_family(k).back()), eval_(fk_) {}

double DensityDeficit::operator()(double c, double tol) const {
  if (!(tol > 0)) throw std::invalid_argument("big_f needs tol > 0");
  if (!(c >= 0)) throw std::invalid_argument("big_f needs c >= 0");
  const double upper = static_cast<double>(k_) / (k_ + 1);
  if (c == 0) return upper;  // integrand is 1
  const double scale = std::pow(c, k_) * lambda_.value;
  std::vector<double> cuts;
  for (double b : eval_.breakpoints()) {
    if (b >= 0.0 && b <= upper) cuts.push_back(b);
  }
  if (cuts.empty() || cuts.front() > 0.0) cuts.insert(cuts.begin(), 0.0);
  if (cuts.back() < upper) cuts.push_back(upper);
  return integrate_piecewise([&](double t) { return std::exp(-scale * eval_(t)); }, cuts, tol);
}

double DensityDeficit::solve(double target, double tol) const {
  const double top = static_cast<double>(k_) / (k_ + 1);
  if (!(target > 0) || !(target < top)) throw std::invalid_argument("solve_c target outside (0, k/(k+1))");
  if (!(tol > 0)) throw std::invalid_argument("solve_c needs tol > 0");
  const double qtol = tol / 10;
  double lo = 0.0, hi = 1.0;
  while ((*this)(hi, qtol) > target) {
    lo = hi;
    hi *= 2;
    if (hi > 1e6) throw std::runtime_error("solve_c failed to bracket the target");
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    double v = (*this)(mid, qtol);
    if (std::abs(v - target) <= tol - qtol) break;
    if (v > target) lo = mid; else hi = mid;
  }
  return mid;
}

double big_f(int k, double c, double tol) { return DensityDeficit(k)(c, tol); }

double solve_c(int k, double target, double tol) { return DensityDeficit(k).solve(target, tol); }

}  // namespace sumdens
