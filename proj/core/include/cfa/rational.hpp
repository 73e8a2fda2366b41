#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cfa {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

Integer int_pow(const Integer& base, unsigned long e);
Rational rat_pow(const Rational& base, long e);

// "a/b" or "a"; used by the JSON formats and the CLI.
Rational parse_rational(const std::string& s);

// Canonical exact rendering: "num/den" with den > 0, always including "/den".
std::string rational_repr(const Rational& q);

// Human rendering: integer values without the "/1".
std::string rational_str(const Rational& q);

// Fixed-point decimal with `places` fractional digits, round-half-even.
// to_decimal(43/16) == "2.687500000000" for places = 12.
std::string to_decimal(const Rational& q, int places = 12);

// sqrt when the argument is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace cfa
