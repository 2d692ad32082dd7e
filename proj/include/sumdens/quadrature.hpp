#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sumdens/piecewise_poly.hpp"
#include "sumdens/special_functions.hpp"

namespace sumdens {

// 32-point Gauss–Legendre rule on [-1, 1]; nodes found by Newton iteration.
struct GaussLegendre32 {
  std::array<double, 32> nodes{};
  std::array<double, 32> weights{};

  static const GaussLegendre32& instance();
  double integrate(const std::function<double(double)>& f, double a, double b) const;
};

// Per-piece adaptive integration: a piece is accepted when the one-panel and the
// bisected two-panel estimates agree within its share of `tol`; otherwise it is split.
double integrate_piecewise(const std::function<double(double)>& f, const std::vector<double>& cuts, double tol);

// F_k(c) = ∫_0^{k/(k+1)} exp(-c^k λ_k f_k(t)) dt, with f_k held exactly and evaluated in double.
class DensityDeficit {
 public:
  explicit DensityDeficit(int k);

  int k() const { return k_; }
  const SpecialValue& lambda() const { return lambda_; }
  const PiecewisePolynomial& fk() const { return fk_; }
  double fk_at(double t) const { return eval_(t); }

  double operator()(double c, double tol) const;
  // c with |F_k(c) - target| <= tol, by bisection; 0 < target < k/(k+1).
  double solve(double target, double tol) const;

 private:
  int k_;
  SpecialValue lambda_;
  PiecewisePolynomial fk_;
  PiecewiseEvaluator eval_;
};

double big_f(int k, double c, double tol);
double solve_c(int k, double target, double tol);

}  // namespace sumdens
