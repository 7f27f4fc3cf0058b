#include "mhn/mobius.hpp"

#include <sstream>

namespace mhn {

MobiusMap::MobiusMap(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (determinant() == 0) throw DegenerateMap("Moebius map with zero determinant");
}

Rational MobiusMap::apply(const Rational& z) const {
  Rational den = c * z + d;
  if (den == 0) throw PoleEvaluation("Moebius map sends z = " + mhn::to_string(z) + " to infinity");
  return (a * z + b) / den;
}

bool MobiusMap::fixes(const Rational& z) const {
  if (c * z + d == 0) return false;
  return apply(z) == z;
}

RationalFunction MobiusMap::as_rational_function() const {
  return RationalFunction(Polynomial({b, a}), Polynomial({d, c}));
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
  return MobiusMap(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d, -b, -c, a); }

bool MobiusMap::is_identity() const { return b == 0 && c == 0 && a == d; }

std::string MobiusMap::to_string() const {
  std::ostringstream os;
  os << "z -> (" << mhn::to_string(a) << "*z + " << mhn::to_string(b) << ")/(" << mhn::to_string(c)
     << "*z + " << mhn::to_string(d) << ")";
  return os.str();
}

}  // namespace mhn
