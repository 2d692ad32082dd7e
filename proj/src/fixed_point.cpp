#include "sumdens/fixed_point.hpp"

#include <cctype>
#include <cmath>

namespace sumdens {

namespace {

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

u128 big_to_u128(const BigInt& z) {
  // z in [0, 2^128)
  BigInt lo = z & BigInt("18446744073709551615");
  BigInt hi = z >> 64;
  return (static_cast<u128>(mpz_get_ui(hi.get_mpz_t())) << 64) |
         static_cast<u128>(mpz_get_ui(lo.get_mpz_t()));
}

BigInt u64_to_big(std::uint64_t n) {
  BigInt z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(n), 0, 0, &n);
  return z;
}

BigInt isqrt(const BigInt& z) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

bool is_square(const BigInt& z) { return mpz_perfect_square_p(z.get_mpz_t()) != 0; }

}  // namespace

double fixed_to_double(u128 f) {
  return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(f >> 64)), -64) +
         std::ldexp(static_cast<double>(static_cast<std::uint64_t>(f)), -128);
}

std::optional<u128> fixed_threshold(const Rational& e) {
  if (e >= 1) return std::nullopt;
  if (e <= 0) return u128{0};
  BigInt scaled = floor(Rational(e * Rational(pow2(128))));
  return big_to_u128(scaled);
}

FixedPointReal FixedPointReal::from_rational(const Rational& q) {
  FixedPointReal x;
  x.integer_part_ = floor(q);
  Rational frac = q - Rational(x.integer_part_);
  x.fraction_ = *fixed_threshold(frac);
  x.exactness_ = Exactness::Rational;
  x.rational_ = q;
  x.label_ = to_string(q);
  return x;
}

FixedPointReal FixedPointReal::from_quadratic(const QuadraticIrrational& q) {
  if (q.coeff <= 0 || q.denom <= 0 || q.radicand <= 0) {
    throw std::invalid_argument("quadratic irrational needs positive coeff, radicand and denominator");
  }
  if (is_square(q.radicand)) throw std::invalid_argument("radicand is a perfect square");
  FixedPointReal x;
  x.exactness_ = Exactness::QuadraticApproximant;
  x.rational_.reset();
  x.quadratic_ = q;
  x.integer_part_ = x.floor_mul_exact(1);
  // floor(x * 2^128) = floor((offset * 2^128 + isqrt(coeff^2 * radicand * 2^256)) / denom)
  BigInt scale = pow2(128);
  BigInt root = isqrt(q.coeff * q.coeff * q.radicand * scale * scale);
  BigInt scaled;
  BigInt numer = q.offset * scale + root;
  mpz_fdiv_q(scaled.get_mpz_t(), numer.get_mpz_t(), q.denom.get_mpz_t());
  x.fraction_ = big_to_u128(BigInt(scaled - x.integer_part_ * scale));
  x.label_ = "(" + q.offset.get_str() + "+" + q.coeff.get_str() + "*sqrt(" + q.radicand.get_str() +
             "))/" + q.denom.get_str();
  return x;
}

FixedPointReal FixedPointReal::sqrt2() {
  auto x = from_quadratic({0, 1, 2, 1});
  x.label_ = "sqrt2";
  return x;
}

FixedPointReal FixedPointReal::golden() {
  auto x = from_quadratic({1, 1, 5, 2});
  x.label_ = "golden";
  return x;
}

FixedPointReal FixedPointReal::parse(std::string_view text) {
  std::string t(text);
  for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "sqrt2") return sqrt2();
  if (t == "golden" || t == "phi") return golden();
  if (t.rfind("sqrt", 0) == 0) {
    std::string digits = t.substr(4);
    Rational d = parse_rational(digits);
    if (d.get_den() != 1 || d <= 0) throw ParseError("bad radicand in '" + t + "'");
    if (is_square(d.get_num())) return from_rational(Rational(isqrt(d.get_num())));
    auto x = from_quadratic({0, 1, d.get_num(), 1});
    x.label_ = t;
    return x;
  }
  return from_rational(parse_rational(text));
}

double FixedPointReal::to_double() const {
  return integer_part_.get_d() + fixed_to_double(fraction_);
}

double FixedPointReal::frac(std::uint64_t n) const { return fixed_to_double(frac_fixed(n)); }

int FixedPointReal::compare_frac(std::uint64_t n, const Rational& e) const {
  if (e >= 1) return -1;
  if (!is_rational() && n > 0) {
    if (e <= 0) return 1;
    u128 threshold = *fixed_threshold(e);
    u128 f = frac_fixed(n);
    u128 slack = static_cast<u128>(n) + 2;
    bool near_wrap = f > ~u128{0} - slack;
    if (!near_wrap) {
      if (f > threshold && f - threshold > 1) return 1;
      if (threshold > f && threshold - f > slack) return -1;
    }
  }
  return compare_frac_exact(n, e);
}

int FixedPointReal::compare_frac_exact(std::uint64_t n, const Rational& e) const {
  BigInt nz = u64_to_big(n);
  if (rational_) {
    Rational v = Rational(nz) * *rational_;
    Rational f = v - Rational(floor(v));
    return cmp(f, e) < 0 ? -1 : (cmp(f, e) > 0 ? 1 : 0);
  }
  if (n == 0) return cmp(Rational(0), e) < 0 ? -1 : (e == 0 ? 0 : 1);
  const auto& q = *quadratic_;
  // frac(n x) < e  <=>  n*coeff*sqrt(d) < denom*(floor(n x) + e) - n*offset =: r
  Rational r = Rational(q.denom) * (Rational(floor_mul_exact(n)) + e) - Rational(nz * q.offset);
  if (r <= 0) return 1;
  BigInt lhs = nz * q.coeff;
  lhs = lhs * lhs * q.radicand * r.get_den() * r.get_den();
  BigInt rhs = r.get_num() * r.get_num();
  return lhs < rhs ? -1 : 1;
}

BigInt FixedPointReal::floor_mul(std::uint64_t n) const {
  if (!rational_ && n > 0) {
    u128 fh = fraction_ >> 64;
    u128 fl = static_cast<std::uint64_t>(fraction_);
    u128 a = static_cast<u128>(n) * fl;
    u128 b = static_cast<u128>(n) * fh;
    u128 carry_part = b + (a >> 64);
    std::uint64_t whole = static_cast<std::uint64_t>(carry_part >> 64);
    u128 low = frac_fixed(n);
    u128 slack = static_cast<u128>(n) + 2;
    if (low <= ~u128{0} - slack) return integer_part_ * u64_to_big(n) + u64_to_big(whole);
  }
  return floor_mul_exact(n);
}

BigInt FixedPointReal::floor_mul_exact(std::uint64_t n) const {
  BigInt nz = u64_to_big(n);
  if (rational_) return floor(Rational(Rational(nz) * *rational_));
  const auto& q = *quadratic_;
  BigInt root = isqrt(nz * nz * q.coeff * q.coeff * q.radicand);
  BigInt numer = nz * q.offset + root;
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), numer.get_mpz_t(), q.denom.get_mpz_t());
  return out;
}

}  // namespace sumdens

namespace sumdens {

namespace {

bool fits_i64(const BigInt& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

FracTester::FracTester(const FixedPointReal& x, const Rational& lo, bool lo_closed, const Rational& hi,
                       bool hi_closed)
    : x_(&x), lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (lo < 0 || hi > 1 || lo > hi) throw std::invalid_argument("FracTester needs 0 <= lo <= hi <= 1");
  lo_fixed_ = *fixed_threshold(lo < 1 ? lo : Rational(0));
  hi_is_one_ = hi == 1;
  if (!hi_is_one_) hi_fixed_ = *fixed_threshold(hi);
  if (const auto& r = x.rational()) {
    if (fits_i64(r->get_num()) && fits_i64(r->get_den()) && fits_i64(lo.get_num()) &&
        fits_i64(lo.get_den()) && fits_i64(hi.get_num()) && fits_i64(hi.get_den())) {
      small_rational_ = true;
      p_ = r->get_num().get_si();
      q_ = static_cast<std::uint64_t>(r->get_den().get_si());
      lo_num_ = lo.get_num().get_si();
      lo_den_ = static_cast<std::uint64_t>(lo.get_den().get_si());
      hi_num_ = hi.get_num().get_si();
      hi_den_ = static_cast<std::uint64_t>(hi.get_den().get_si());
    }
  }
}

int FracTester::compare(std::uint64_t n, const Rational& e, u128 e_fixed) const {
  if (small_rational_) {
    using i128 = __int128;
    i128 prod = static_cast<i128>(n) * p_;
    i128 r = prod % static_cast<i128>(q_);
    if (r < 0) r += static_cast<i128>(q_);
    // frac = r / q_ against e = num / den
    const bool is_lo = &e == &lo_;
    i128 num = is_lo ? lo_num_ : hi_num_;
    i128 den = static_cast<i128>(is_lo ? lo_den_ : hi_den_);
    i128 lhs = r * den;
    i128 rhs = num * static_cast<i128>(q_);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  if (!x_->is_rational() && n > 0) {
    u128 f = x_->frac_fixed(n);
    u128 slack = static_cast<u128>(n) + 2;
    bool near_wrap = f > ~u128{0} - slack;
    if (!near_wrap) {
      if (f > e_fixed && f - e_fixed > 1) return 1;
      if (e_fixed > f && e_fixed - f > slack) return -1;
    }
  }
  return x_->compare_frac_exact(n, e);
}

bool FracTester::operator()(std::uint64_t n) const {
  bool lo_trivial = lo_ == 0 && lo_closed_;
  if (!lo_trivial) {
    int c = compare(n, lo_, lo_fixed_);
    if (c < 0 || (c == 0 && !lo_closed_)) return false;
  }
  if (hi_is_one_) return true;  // frac < 1 always
  int c = compare(n, hi_, hi_fixed_);
  return c < 0 || (c == 0 && hi_closed_);
}

}  // namespace sumdens
