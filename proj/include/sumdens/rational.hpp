#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumdens {

// Exact rational in lowest terms, denominator > 0. Every arithmetic result of
// mpq_class is canonical; values built from parts go through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

// Accepts "p/q", "-p/q", integers and finite decimals ("0.125", "1e-3" is not accepted).
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

// Exponent of 2 in q (q != 0).
long dyadic_valuation(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace sumdens
