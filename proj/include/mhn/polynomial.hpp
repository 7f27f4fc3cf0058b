#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mhn/rational.hpp"

namespace mhn {

/// Dense univariate polynomial over Rational. Trailing zero coefficients are
/// trimmed, so degree() is exact; the zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) : c_{c} { trim(); }           // NOLINT(implicit)
  Polynomial(long c) : Polynomial(Rational(c)) {}             // NOLINT(implicit)
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Polynomial variable();  // z
  static Polynomial monomial(int degree, const Rational& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  const Rational& leading_coeff() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& s);
  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  Polynomial pow(unsigned e) const;

  /// Coefficients of p(w + c) as a polynomial in w.
  Polynomial taylor_shift(const Rational& c) const;

  /// Euclidean division; throws DivisionByZero when dividing by zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  static Polynomial gcd(Polynomial a, Polynomial b);  // monic gcd, gcd(0,0) = 0

  Polynomial monic() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[i] multiplies var^i
};

}  // namespace mhn
