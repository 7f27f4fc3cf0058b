#include "mhn/polynomial.hpp"

#include <sstream>

namespace mhn {

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
  if (coeff == 0 || degree < 0) return Polynomial();
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

const Rational& Polynomial::leading_coeff() const {
  static const Rational zero(0);
  return c_.empty() ? zero : c_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
  Polynomial r = a;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc(Rational(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Polynomial Polynomial::taylor_shift(const Rational& c) const {
  // Horner: p(w + c) accumulated from the leading coefficient down.
  Polynomial acc;
  Polynomial w_plus_c({c, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w_plus_c + Polynomial(*it);
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    Rational f = r.leading_coeff() / b.leading_coeff();
    Polynomial t = Polynomial::monomial(d, f);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading_coeff());
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    first = false;
    if (i == 0 || a != 1) {
      os << mhn::to_string(a);
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace mhn
