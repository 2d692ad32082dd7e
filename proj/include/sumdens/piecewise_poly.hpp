#pragma once

#include <cstddef>
#include <vector>

#include "sumdens/rational.hpp"

namespace sumdens {

// Polynomial with exact coefficients, coeffs[i] multiplying x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;
  // q(x) = p(x + s)
  Polynomial shifted(const Rational& s) const;
  // primitive vanishing at 0
  Polynomial primitive() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Piece i is pieces[i] on [breakpoints[i], breakpoints[i+1]); the last piece is also
// used at the final breakpoint. The function is zero outside [front, back].
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() = default;
  PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);
  static PiecewisePolynomial indicator(const Rational& lo, const Rational& hi);
  static PiecewisePolynomial constant_on(const Rational& lo, const Rational& hi, const Rational& c);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Rational& lower() const { return breakpoints_.front(); }
  const Rational& upper() const { return breakpoints_.back(); }

  Rational operator()(const Rational& x) const;
  // Values of the two polynomials meeting at breakpoint i (0 < i < m).
  Rational left_limit(std::size_t i) const;
  Rational right_limit(std::size_t i) const;

  // Drops breakpoints between equal neighbouring pieces.
  PiecewisePolynomial simplified() const;

 private:
  std::size_t piece_index(const Rational& x) const;

  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
};

Rational evaluate(const PiecewisePolynomial& f, const Rational& x);
// Continuous primitive F(x) = ∫_{lower}^{x} f on the same breakpoints.
PiecewisePolynomial antiderivative(const PiecewisePolynomial& f);
// ∫_a^b f, exact.
Rational definite_integral(const PiecewisePolynomial& f, const Rational& a, const Rational& b);
// g(x) = ∫_{max(0, x-L)}^{x} f(y) dy on [lower, upper + L].
PiecewisePolynomial convolve_with_indicator(const PiecewisePolynomial& f, const Rational& width);

// One step of the f_j recursion on [0, 1]:
//   f_{j+1}(x) = ∫ over [max(0, x - 1/(k+1)), min(x, j/(k+1))] of f_j.
PiecewisePolynomial f_recursion_step(const PiecewisePolynomial& fj, int j, int k);
// [f_1, ..., f_k] with f_1 the indicator of [0, 1).
std::vector<PiecewisePolynomial> f_family(int k);

// Double-precision evaluation with per-piece coefficients re-centred at the left breakpoint.
class PiecewiseEvaluator {
 public:
  explicit PiecewiseEvaluator(const PiecewisePolynomial& f);
  double operator()(double x) const;
  const std::vector<double>& breakpoints() const { return breaks_; }

 private:
  std::vector<double> breaks_;
  std::vector<std::vector<double>> local_;
};

}  // namespace sumdens
