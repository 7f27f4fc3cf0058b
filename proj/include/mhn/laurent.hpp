#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhn/mobius.hpp"
#include "mhn/rational.hpp"
#include "mhn/rational_function.hpp"

namespace mhn {

/// Truncated Laurent series in w = z - center with explicit exactness
/// bookkeeping. The semantics of the valid window [valid_lo, valid_hi]:
///   - every coefficient with exponent below valid_lo is exactly zero,
///   - coefficients with exponent in [valid_lo, valid_hi] are exactly the
///     stored values (zero when not stored),
///   - coefficients above valid_hi are unknown.
/// valid_hi == kExact marks a finite Laurent polynomial that is exact at
/// every exponent. Operations propagate the sharpest window they can
/// guarantee; reading a coefficient outside the window throws InvalidWindow.
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 28;

  LaurentSeries() : center_(0), lo_(0), valid_lo_(0), valid_hi_(kExact) {}

  static LaurentSeries zero(const Rational& center);
  static LaurentSeries constant(const Rational& center, const Rational& value);
  static LaurentSeries monomial(const Rational& center, int exponent, const Rational& coeff);
  static LaurentSeries laurent_polynomial(const Rational& center,
                                          const std::map<int, Rational>& coeffs);
  /// Raw constructor for truncated data: coeffs[i] multiplies w^(lo + i),
  /// exact on [valid_lo, valid_hi].
  static LaurentSeries truncated(const Rational& center, int lo, std::vector<Rational> coeffs,
                                 int valid_lo, int valid_hi);

  const Rational& center() const { return center_; }
  int valid_lo() const { return valid_lo_; }
  int valid_hi() const { return valid_hi_; }
  bool is_exact() const { return valid_hi_ == kExact; }
  /// True when all stored coefficients vanish.
  bool is_storage_zero() const;
  /// Exponent of the first nonzero stored coefficient; requires one to exist.
  int order() const;

  bool knows(int exponent) const {
    return exponent < valid_lo_ || exponent <= valid_hi_;
  }
  /// Exact coefficient of w^exponent; throws InvalidWindow when unknown.
  Rational coeff(int exponent) const;
  /// Coefficient of w^(-1); 0 when the window proves there is none.
  Rational residue() const { return coeff(-1); }

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  /// Product with storage capped at exponent out_hi (the full lower part is
  /// always computed so the window semantics stay intact).
  LaurentSeries mul_window(const LaurentSeries& o, int out_hi) const;

  LaurentSeries scale(const Rational& s) const;
  /// Multiplication by w^k.
  LaurentSeries shift(int k) const;
  LaurentSeries derivative() const;
  /// Term-by-term antiderivative with constant 0. Requires the residue to be
  /// known and zero.
  LaurentSeries antiderivative() const;
  /// Multiplicative inverse. hi_cap bounds the output exponent range for
  /// exact inputs (mandatory there); truncated inputs stop at the window.
  LaurentSeries inverse(int hi_cap = kExact) const;
  LaurentSeries pow_int(int e, int hi_cap = kExact) const;
  /// Drops knowledge (and storage) above new_hi.
  LaurentSeries truncate_to(int new_hi) const;

  std::string to_string(const std::string& var = "w") const;

 private:
  void trim();
  Rational raw(int exponent) const;  // stored value, 0 outside storage

  Rational center_;
  int lo_ = 0;                   // exponent of c_[0]
  std::vector<Rational> c_;
  int valid_lo_ = 0;
  int valid_hi_ = kExact;
};

/// Laurent expansion of f about z = center, exact at least on
/// [min(lo, ord_center f), hi].
LaurentSeries series_expand(const RationalFunction& f, const Rational& center, int lo, int hi);

/// Substitutes z -> m(z) into a series centered at a fixed point of m.
/// Throws CenterNotFixed otherwise. hi_cap bounds the output exponents when
/// the input is exact.
LaurentSeries compose_mobius(const LaurentSeries& s, const MobiusMap& m, int hi_cap = -1);

/// outer(inner) for an inner series of positive order in the same variable
/// as the desired output. The result is a series with inner's center.
LaurentSeries compose_series(const LaurentSeries& outer, const LaurentSeries& inner, int hi_cap);

/// f(s) for a rational function f and a series value s (the constant term of
/// s is the evaluation point; the denominator must not vanish identically).
LaurentSeries compose_rational_function(const RationalFunction& f, const LaurentSeries& s);

/// Functional inverse of the branch of x(z) at a simple zero z0: returns the
/// power series z(x) (in x, centered at 0, constant term z0) with
/// x(z(x)) = x exactly through x^order. Throws NotSimpleZero when x(z0) != 0
/// or x'(z0) = 0.
LaurentSeries inverse_branch_series(const RationalFunction& x, const Rational& z0, int order);

}  // namespace mhn
