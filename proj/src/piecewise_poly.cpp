#include "sumdens/piecewise_poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sumdens {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Rational& s) const {
  // Horner in the polynomial ring: acc <- acc * (x + s) + c
  std::vector<Rational> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * s;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return Polynomial(std::move(acc));
}

Polynomial Polynomial::primitive() const {
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return Polynomial(std::move(out));
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size()) {
    throw std::invalid_argument("piecewise polynomial needs m+1 breakpoints for m pieces");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw std::invalid_argument("breakpoints must be strictly ascending");
    }
  }
}

PiecewisePolynomial PiecewisePolynomial::indicator(const Rational& lo, const Rational& hi) {
  return constant_on(lo, hi, Rational(1));
}

PiecewisePolynomial PiecewisePolynomial::constant_on(const Rational& lo, const Rational& hi,
                                                     const Rational& c) {
  return PiecewisePolynomial({lo, hi}, {Polynomial::constant(c)});
}

std::size_t PiecewisePolynomial::piece_index(const Rational& x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (i == 0) return 0;
  return std::min(i - 1, pieces_.size() - 1);
}

Rational PiecewisePolynomial::operator()(const Rational& x) const {
  if (x < lower() || x > upper()) return Rational(0);
  return pieces_[piece_index(x)](x);
}

Rational PiecewisePolynomial::left_limit(std::size_t i) const { return pieces_.at(i - 1)(breakpoints_.at(i)); }

Rational PiecewisePolynomial::right_limit(std::size_t i) const { return pieces_.at(i)(breakpoints_.at(i)); }

PiecewisePolynomial PiecewisePolynomial::simplified() const {
  std::vector<Rational> bps{breakpoints_.front()};
  std::vector<Polynomial> ps{pieces_.front()};
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i] == ps.back()) continue;
    bps.push_back(breakpoints_[i]);
    ps.push_back(pieces_[i]);
  }
  bps.push_back(breakpoints_.back());
  return PiecewisePolynomial(std::move(bps), std::move(ps));
}

Rational evaluate(const PiecewisePolynomial& f, const Rational& x) { return f(x); }

PiecewisePolynomial antiderivative(const PiecewisePolynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(f.pieces().size());
  Rational running(0);
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    Polynomial p = f.pieces()[i].primitive();
    // shift so that the primitive equals the running integral at the left breakpoint
    Polynomial q = p + Polynomial::constant(running - p(bps[i]));
    running = q(bps[i + 1]);
    out.push_back(std::move(q));
  }
  return PiecewisePolynomial(bps, std::move(out));
}

namespace {

// F clamped outside its domain: 0 to the left, F(upper) to the right.
Rational clamped_value(const PiecewisePolynomial& primitive, const Rational& t) {
  if (t <= primitive.lower()) return Rational(0);
  if (t >= primitive.upper()) return primitive.pieces().back()(primitive.upper());
  return primitive(t);
}

// Polynomial in x equal to Fc(min(x + shift, cap)) on a cell containing `mid`.
Polynomial clamped_piece(const PiecewisePolynomial& primitive, const Rational& shift, const Rational& cap,
                         const Rational& mid) {
  Rational t = mid + shift;
  if (t >= cap) return Polynomial::constant(clamped_value(primitive, cap));
  if (t <= primitive.lower() || t >= primitive.upper()) return Polynomial::constant(clamped_value(primitive, t));
  auto it = std::upper_bound(primitive.breakpoints().begin(), primitive.breakpoints().end(), t);
  std::size_t i = static_cast<std::size_t>(it - primitive.breakpoints().begin()) - 1;
  return primitive.pieces()[i].shifted(shift);
}

PiecewisePolynomial build_on_cells(std::vector<Rational> candidates, const Rational& lo, const Rational& hi,
                                   const std::function<Polynomial(const Rational&)>& piece_at) {
  candidates.push_back(lo);
  candidates.push_back(hi);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Rational> bps;
  for (auto& c : candidates) {
    if (c >= lo && c <= hi) bps.push_back(c);
  }
  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    Rational mid = (bps[i] + bps[i + 1]) / 2;
    pieces.push_back(piece_at(mid));
  }
  return PiecewisePolynomial(std::move(bps), std::move(pieces)).simplified();
}

}  // namespace

Rational definite_integral(const PiecewisePolynomial& f, const Rational& a, const Rational& b) {
  auto F = antiderivative(f);
  return clamped_value(F, b) - clamped_value(F, a);
}

PiecewisePolynomial convolve_with_indicator(const PiecewisePolynomial& f, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("convolution width must be positive");
  auto F = antiderivative(f);
  Rational lo = std::max(Rational(0), f.lower());
  Rational hi = f.upper() + width;
  Rational no_cap = hi + 1;
  std::vector<Rational> candidates;
  for (const auto& b : F.breakpoints()) {
    candidates.push_back(b);
    candidates.push_back(b + width);
  }
  candidates.push_back(width);
  return build_on_cells(std::move(candidates), lo, hi, [&](const Rational& mid) {
    Rational lower_end = mid - width;
    Polynomial upper_term = clamped_piece(F, Rational(0), no_cap, mid);
    Polynomial lower_term = lower_end <= 0 ? Polynomial::constant(Rational(0))
                                           : clamped_piece(F, -width, no_cap, mid);
    return upper_term - lower_term;
  });
}

PiecewisePolynomial f_recursion_step(const PiecewisePolynomial& fj, int j, int k) {
  if (k < 1 || j < 1 || j > k) throw std::invalid_argument("f recursion needs 1 <= j <= k");
  Rational step = make_rational(1, k + 1);
  Rational cap = make_rational(j, k + 1);  // b_j(x) = min(x, j/(k+1))
  auto F = antiderivative(fj);
  std::vector<Rational> candidates{cap, step, cap + step};
  for (const auto& b : F.breakpoints()) {
    candidates.push_back(b);
    candidates.push_back(b + step);
  }
  return build_on_cells(std::move(candidates), Rational(0), Rational(1), [&](const Rational& mid) {
    Polynomial upper_term = clamped_piece(F, Rational(0), cap, mid);
    // a_1(x) = max(0, x - 1/(k+1))
    Polynomial lower_term = mid - step <= 0 ? Polynomial::constant(Rational(0))
                                            : clamped_piece(F, -step, Rational(2), mid);
    Polynomial diff = upper_term - lower_term;
    // empty integration range where a_1(x) >= b_j(x)
    Rational a = std::max(Rational(0), Rational(mid - step));
    Rational b = std::min(mid, cap);
    return a >= b ? Polynomial() : diff;
  });
}

std::vector<PiecewisePolynomial> f_family(int k) {
  if (k < 1) throw std::invalid_argument("f_family needs k >= 1");
  std::vector<PiecewisePolynomial> fam;
  fam.push_back(PiecewisePolynomial::indicator(Rational(0), Rational(1)));
  for (int j = 1; j < k; ++j) fam.push_back(f_recursion_step(fam.back(), j, k));
  return fam;
}

PiecewiseEvaluator::PiecewiseEvaluator(const PiecewisePolynomial& f) {
  for (const auto& b : f.breakpoints()) breaks_.push_back(b.get_d());
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    Polynomial local = f.pieces()[i].shifted(f.breakpoints()[i]);
    std::vector<double> c;
    for (const auto& q : local.coeffs()) c.push_back(q.get_d());
    local_.push_back(std::move(c));
  }
}

double PiecewiseEvaluator::operator()(double x) const {
  if (x < breaks_.front() || x > breaks_.back()) return 0.0;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
  i = i == 0 ? 0 : std::min(i - 1, local_.size() - 1);
  double t = x - breaks_[i];
  double acc = 0.0;
  const auto& c = local_[i];
  for (auto r = c.rbegin(); r != c.rend(); ++r) acc = acc * t + *r;
  return acc;
}

}  // namespace sumdens
