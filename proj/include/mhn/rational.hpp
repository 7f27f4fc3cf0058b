#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "mhn/errors.hpp"

namespace mhn {

/// Exact rational scalar. Arithmetic results are kept in lowest terms with a
/// positive denominator; the two-argument constructor is NOT reduced, so
/// build values from variables with make_rational below.
using Rational = mpq_class;

/// Exact integer scalar.
using Integer = mpz_class;

/// Canonical string form: "p/q" in lowest terms, "p" when q = 1.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p", "p/q" (also tolerates non-canonical input such as
/// "7/21" or "1/1" and canonicalizes it).
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational: \"" + s + "\"");
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator: \"" + s + "\"");
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// binom(2m, m), the coefficient carried by each part in the polynomiality
/// normalization.
inline Integer central_binomial(unsigned m) { return binomial(2 * m, m); }

inline Integer double_factorial_odd(unsigned a) {
  // (2a+1)!! = 1*3*5*...*(2a+1)
  Integer r = 1;
  for (unsigned i = 3; i <= 2 * a + 1; i += 2) r *= i;
  return r;
}

inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return 1;
  if (base == 0 && e < 0) throw DivisionByZero("0 raised to a negative power");
  Rational acc = 1;
  Rational b = e > 0 ? base : Rational(1) / base;
  for (long i = 0; i < (e > 0 ? e : -e); ++i) acc *= b;
  return acc;
}

inline Integer pow_integer(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace mhn
