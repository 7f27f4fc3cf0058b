#include "mhn/rational_function.hpp"

#include <sstream>

#include "mhn/mobius.hpp"

namespace mhn {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  Rational lead = den_.leading_coeff();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw PoleEvaluation("evaluation at a pole: z = " + mhn::to_string(x));
  return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::compose_mobius(const MobiusMap& m) const {
  // f((az+b)/(cz+d)) with denominators cleared by (cz+d)^N, N = max degree.
  Polynomial up({m.b, m.a});    // a z + b
  Polynomial down({m.d, m.c});  // c z + d
  int N = std::max(num_.degree(), den_.degree());
  auto lift = [&](const Polynomial& p) {
    Polynomial acc;
    for (int k = 0; k <= p.degree(); ++k) {
      if (p.coeff(k) == 0) continue;
      acc += Polynomial(p.coeff(k)) * up.pow(k) * down.pow(N - k);
    }
    return acc;
  };
  return RationalFunction(lift(num_), lift(den_));
}

int RationalFunction::order_at(const Rational& x) const {
  if (is_zero()) throw Error("order_at of the zero function");
  auto mult = [&](Polynomial p) {
    int m = 0;
    Polynomial root({-x, Rational(1)});
    while (!p.is_zero() && p.evaluate(x) == 0) {
      p = Polynomial::divmod(p, root).first;
      ++m;
    }
    return m;
  };
  return mult(num_) - mult(den_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return (RationalFunction(Polynomial(Rational(1))) / *this).pow(-e);
  RationalFunction acc(Polynomial(Rational(1)));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == Polynomial(Rational(1))) return num_.to_string(var);
  std::ostringstream os;
  os << "(" << num_.to_string(var) << ")/(" << den_.to_string(var) << ")";
  return os.str();
}

}  // namespace mhn
