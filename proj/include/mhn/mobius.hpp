#pragma once

#include <string>

#include "mhn/rational.hpp"
#include "mhn/rational_function.hpp"

namespace mhn {

/// z -> (a z + b) / (c z + d) with a d - b c != 0.
struct MobiusMap {
  Rational a, b, c, d;

  MobiusMap(Rational a_, Rational b_, Rational c_, Rational d_);

  static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }

  Rational determinant() const { return a * d - b * c; }

  /// Throws PoleEvaluation when c z + d = 0.
  Rational apply(const Rational& z) const;

  bool fixes(const Rational& z) const;

  RationalFunction as_rational_function() const;

  MobiusMap compose(const MobiusMap& o) const;  // this after o: z -> this(o(z))
  MobiusMap inverse() const;

  bool is_identity() const;
  bool is_involution() const { return compose(*this).is_identity(); }

  std::string to_string() const;
};

}  // namespace mhn
