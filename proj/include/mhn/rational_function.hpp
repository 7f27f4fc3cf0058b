#pragma once

#include <string>

#include "mhn/polynomial.hpp"

namespace mhn {

struct MobiusMap;

/// Quotient of polynomials kept in canonical form: gcd(num, den) = 1 and den
/// monic. Equality of canonical forms is equality of functions.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}   // NOLINT(implicit)
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}    // NOLINT(implicit)
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {} // NOLINT(implicit)
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalFunction derivative() const;

  /// Throws PoleEvaluation when den(x) = 0.
  Rational evaluate(const Rational& x) const;

  /// Substitutes z -> (a z + b) / (c z + d). Exact; poles move with the map.
  RationalFunction compose_mobius(const MobiusMap& m) const;

  /// Order of vanishing at x: multiplicity of (z - x) in num minus den.
  /// Positive for zeros, negative for poles, 0 when regular and nonzero.
  int order_at(const Rational& x) const;

  RationalFunction pow(int e) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void normalize();
  Polynomial num_, den_;
};

}  // namespace mhn
