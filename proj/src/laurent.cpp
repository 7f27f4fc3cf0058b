#include "mhn/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace mhn {

namespace {

constexpr int kExactW = LaurentSeries::kExact;

int wadd(int a, int b) {
  if (a >= kExactW || b >= kExactW) return kExactW;
  return a + b;
}

void require_same_center(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.center() != b.center())
    throw Error("series centered at different points: " + to_string(a.center()) + " vs " +
                to_string(b.center()));
}

}  // namespace

void LaurentSeries::trim() {
  size_t drop = 0;
  while (drop < c_.size() && c_[drop] == 0) ++drop;
  if (drop) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
    lo_ += static_cast<int>(drop);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lo_ = 0;
}

Rational LaurentSeries::raw(int exponent) const {
  int i = exponent - lo_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

LaurentSeries LaurentSeries::zero(const Rational& center) {
  LaurentSeries s;
  s.center_ = center;
  return s;
}

LaurentSeries LaurentSeries::constant(const Rational& center, const Rational& value) {
  return monomial(center, 0, value);
}

LaurentSeries LaurentSeries::monomial(const Rational& center, int exponent, const Rational& coeff) {
  LaurentSeries s = zero(center);
  if (coeff != 0) {
    s.lo_ = exponent;
    s.c_ = {coeff};
    s.valid_lo_ = exponent;
  }
  return s;
}

LaurentSeries LaurentSeries::laurent_polynomial(const Rational& center,
                                                const std::map<int, Rational>& coeffs) {
  LaurentSeries s = zero(center);
  if (coeffs.empty()) return s;
  int lo = coeffs.begin()->first, hi = coeffs.rbegin()->first;
  s.lo_ = lo;
  s.c_.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (const auto& [e, v] : coeffs) s.c_[static_cast<size_t>(e - lo)] = v;
  s.valid_lo_ = lo;
  s.trim();
  return s;
}

LaurentSeries LaurentSeries::truncated(const Rational& center, int lo, std::vector<Rational> coeffs,
                                       int valid_lo, int valid_hi) {
  LaurentSeries s;
  s.center_ = center;
  s.lo_ = lo;
  s.c_ = std::move(coeffs);
  s.valid_lo_ = valid_lo;
  s.valid_hi_ = valid_hi;
  s.trim();
  return s;
}

bool LaurentSeries::is_storage_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

int LaurentSeries::order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return lo_ + static_cast<int>(i);
  throw Error("order() of a series without nonzero stored coefficients");
}

Rational LaurentSeries::coeff(int exponent) const {
  if (exponent < valid_lo_) return Rational(0);
  if (exponent <= valid_hi_) return raw(exponent);
  std::ostringstream os;
  os << "coefficient of w^" << exponent << " outside valid window [" << valid_lo_ << ", ";
  if (is_exact()) os << "inf";
  else os << valid_hi_;
  os << "]";
  throw InvalidWindow(os.str());
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_center(a, b);
  LaurentSeries r = LaurentSeries::zero(a.center());
  r.valid_lo_ = std::min(a.valid_lo_, b.valid_lo_);
  r.valid_hi_ = std::min(a.valid_hi_, b.valid_hi_);
  if (a.c_.empty() && b.c_.empty()) return r;
  int slo = a.c_.empty() ? b.lo_ : (b.c_.empty() ? a.lo_ : std::min(a.lo_, b.lo_));
  int shi_a = a.lo_ + static_cast<int>(a.c_.size()) - 1;
  int shi_b = b.lo_ + static_cast<int>(b.c_.size()) - 1;
  int shi = a.c_.empty() ? shi_b : (b.c_.empty() ? shi_a : std::max(shi_a, shi_b));
  shi = std::min(shi, r.valid_hi_);
  if (shi < slo) return r;
  r.lo_ = slo;
  r.c_.resize(static_cast<size_t>(shi - slo + 1));
  for (int e = slo; e <= shi; ++e) r.c_[static_cast<size_t>(e - slo)] = a.raw(e) + b.raw(e);
  r.trim();
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  return a.mul_window(b, kExactW);
}

LaurentSeries LaurentSeries::mul_window(const LaurentSeries& o, int out_hi) const {
  require_same_center(*this, o);
  LaurentSeries r = zero(center_);
  r.valid_lo_ = valid_lo_ + o.valid_lo_;
  r.valid_hi_ = std::min(wadd(valid_lo_, o.valid_hi_), wadd(valid_hi_, o.valid_lo_));
  if (out_hi < kExactW) r.valid_hi_ = std::min(r.valid_hi_, out_hi);
  if (c_.empty() || o.c_.empty()) return r;
  int lo = std::max(r.valid_lo_, lo_ + o.lo_);
  int hi_store = lo_ + static_cast<int>(c_.size()) - 1 + o.lo_ + static_cast<int>(o.c_.size()) - 1;
  int hi = std::min(r.valid_hi_, hi_store);
  if (hi < lo) return r;
  r.lo_ = lo;
  r.c_.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    int ea = lo_ + static_cast<int>(i);
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      int e = ea + o.lo_ + static_cast<int>(j);
      if (e < lo || e > hi) continue;
      r.c_[static_cast<size_t>(e - lo)] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

LaurentSeries LaurentSeries::scale(const Rational& s) const {
  LaurentSeries r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

LaurentSeries LaurentSeries::shift(int k) const {
  LaurentSeries r = *this;
  r.lo_ += k;
  r.valid_lo_ += k;
  if (!r.is_exact()) r.valid_hi_ += k;
  return r;
}

LaurentSeries LaurentSeries::derivative() const {
  LaurentSeries r = zero(center_);
  r.valid_lo_ = valid_lo_ - 1;
  r.valid_hi_ = is_exact() ? kExactW : valid_hi_ - 1;
  std::map<int, Rational> out;
  for (size_t i = 0; i < c_.size(); ++i) {
    int e = lo_ + static_cast<int>(i);
    if (e == 0 || c_[i] == 0) continue;
    out[e - 1] = c_[i] * Rational(e);
  }
  LaurentSeries p = laurent_polynomial(center_, out);
  p.valid_lo_ = r.valid_lo_;
  p.valid_hi_ = r.valid_hi_;
  return p;
}

LaurentSeries LaurentSeries::antiderivative() const {
  if (!knows(-1)) throw InvalidWindow("antiderivative needs the residue coefficient");
  if (coeff(-1) != 0) throw Error("antiderivative of a series with nonzero residue");
  LaurentSeries r = zero(center_);
  std::map<int, Rational> out;
  for (size_t i = 0; i < c_.size(); ++i) {
    int e = lo_ + static_cast<int>(i);
    if (c_[i] == 0) continue;
    out[e + 1] = c_[i] / Rational(e + 1);
  }
  r = laurent_polynomial(center_, out);
  r.valid_lo_ = valid_lo_ + 1;
  r.valid_hi_ = is_exact() ? kExactW : valid_hi_ + 1;
  return r;
}

LaurentSeries LaurentSeries::inverse(int hi_cap) const {
  if (is_storage_zero()) {
    if (is_exact()) throw DivisionByZero("inverse of the zero series");
    throw InvalidWindow("inverse of a series whose order is not determined by its window");
  }
  int v = order();
  int terms;  // compute T_0 .. T_terms of the inverted unit part
  if (is_exact()) {
    if (hi_cap >= kExactW)
      throw InvalidWindow("inverse of an exact series requires an explicit exponent cap");
    terms = hi_cap + v;
  } else {
    terms = valid_hi_ - v;
    if (hi_cap < kExactW) terms = std::min(terms, hi_cap + v);
  }
  if (terms < 0) throw InvalidWindow("window too small to invert series");
  Rational s0 = raw(v);
  std::vector<Rational> T(static_cast<size_t>(terms) + 1);
  T[0] = Rational(1) / s0;
  for (int k = 1; k <= terms; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += raw(v + j) * T[static_cast<size_t>(k - j)];
    T[static_cast<size_t>(k)] = -acc / s0;
  }
  int out_hi;
  if (is_exact()) {
    out_hi = hi_cap;
  } else {
    out_hi = valid_hi_ - 2 * v;
    if (hi_cap < kExactW) out_hi = std::min(out_hi, hi_cap);
  }
  return truncated(center_, -v, std::move(T), -v, out_hi);
}

LaurentSeries LaurentSeries::pow_int(int e, int hi_cap) const {
  if (e < 0) return inverse(hi_cap).pow_int(-e, hi_cap);
  LaurentSeries acc = monomial(center_, 0, 1);
  for (int i = 0; i < e; ++i) {
    acc = acc * *this;
    if (hi_cap < kExactW) acc = acc.truncate_to(hi_cap);
  }
  return acc;
}

LaurentSeries LaurentSeries::truncate_to(int new_hi) const {
  LaurentSeries r = *this;
  r.valid_hi_ = std::min(r.valid_hi_, new_hi);
  int keep = r.valid_hi_ - r.lo_ + 1;
  if (keep < 0) keep = 0;
  if (static_cast<size_t>(keep) < r.c_.size()) r.c_.resize(static_cast<size_t>(keep));
  r.trim();
  return r;
}

std::string LaurentSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    int e = lo_ + static_cast<int>(i);
    if (!first) os << " + ";
    first = false;
    os << mhn::to_string(c_[i]);
    if (e != 0) os << "*" << var << "^" << e;
  }
  if (first) os << "0";
  os << "  (valid [" << valid_lo_ << ", ";
  if (is_exact()) os << "inf";
  else os << valid_hi_;
  os << "], center " << mhn::to_string(center_) << ")";
  return os.str();
}

LaurentSeries series_expand(const RationalFunction& f, const Rational& center, int lo, int hi) {
  if (f.is_zero()) return LaurentSeries::zero(center);
  Polynomial nc = f.num().taylor_shift(center);
  Polynomial dc = f.den().taylor_shift(center);
  auto low_index = [](const Polynomial& p) {
    for (int i = 0; i <= p.degree(); ++i)
      if (p.coeff(i) != 0) return i;
    return -1;
  };
  int vn = low_index(nc), vd = low_index(dc);
  int ord = vn - vd;
  // Unit part of the denominator.
  std::vector<Rational> du;
  for (int i = vd; i <= dc.degree(); ++i) du.push_back(dc.coeff(i));
  if (du.size() == 1) {
    // Denominator is a pure monomial in w: the expansion terminates.
    std::map<int, Rational> out;
    for (int i = vn; i <= nc.degree(); ++i)
      if (nc.coeff(i) != 0) out[i - vd] = nc.coeff(i) / du[0];
    return LaurentSeries::laurent_polynomial(center, out);
  }
  if (hi < ord) {
    // Every requested coefficient is below the order of vanishing.
    std::vector<Rational> none;
    return LaurentSeries::truncated(center, ord, std::move(none), ord, hi);
  }
  int terms = hi - ord;  // unit-part precision
  std::vector<Rational> inv(static_cast<size_t>(terms) + 1);
  inv[0] = Rational(1) / du[0];
  for (int k = 1; k <= terms; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(du.size()); ++j)
      acc += du[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
    inv[static_cast<size_t>(k)] = -acc / du[0];
  }
  std::vector<Rational> out(static_cast<size_t>(terms) + 1, Rational(0));
  for (int i = vn; i <= nc.degree(); ++i) {
    if (nc.coeff(i) == 0) continue;
    int base = i - vn;
    for (int k = base; k <= terms; ++k) out[static_cast<size_t>(k)] += nc.coeff(i) * inv[static_cast<size_t>(k - base)];
  }
  return LaurentSeries::truncated(center, ord, std::move(out), std::min(lo, ord), hi);
}

LaurentSeries compose_series(const LaurentSeries& outer, const LaurentSeries& inner, int hi_cap) {
  if (inner.is_storage_zero())
    throw InvalidWindow("compose_series needs an inner series of determined positive order");
  int v_in = inner.order();
  if (v_in < 1) throw Error("compose_series requires an inner series of positive order");
  if (hi_cap >= LaurentSeries::kExact)
    throw InvalidWindow("compose_series requires a finite output cap");

  int k_lo = outer.valid_lo();
  int k_hi = outer.is_exact() ? hi_cap / v_in : std::min(outer.valid_hi(), hi_cap / v_in);
  LaurentSeries acc = LaurentSeries::zero(inner.center());
  // Nonnegative powers.
  LaurentSeries pw = LaurentSeries::monomial(inner.center(), 0, 1);
  for (int k = 0; k <= k_hi; ++k) {
    if (k >= k_lo && outer.knows(k)) {
      Rational c = outer.coeff(k);
      if (c != 0) acc += pw.scale(c);
    }
    if (k < k_hi) pw = (pw * inner).truncate_to(hi_cap);
  }
  // Negative powers, via the inverse of the inner series.
  if (k_lo < 0) {
    LaurentSeries inv = inner.inverse(hi_cap + (-k_lo + 1) * v_in);
    LaurentSeries ipw = LaurentSeries::monomial(inner.center(), 0, 1);
    for (int k = -1; k >= k_lo; --k) {
      ipw = (ipw * inv).truncate_to(hi_cap + (-k_lo) * v_in);
      Rational c = outer.coeff(k);
      if (c != 0) acc += ipw.scale(c);
    }
  }
  // Unknown outer coefficients above the window first disturb exponent
  // (valid_hi + 1) * v_in.
  if (!outer.is_exact()) {
    int bound = (outer.valid_hi() + 1) * v_in - 1;
    acc = acc.truncate_to(std::min(bound, hi_cap));
  } else {
    acc = acc.truncate_to(hi_cap);
  }
  return acc;
}

LaurentSeries compose_mobius(const LaurentSeries& s, const MobiusMap& m, int hi_cap) {
  const Rational& c0 = s.center();
  if (m.c * c0 + m.d == 0 || !m.fixes(c0))
    throw CenterNotFixed("Moebius map does not fix series center " + to_string(c0));
  int cap = hi_cap;
  if (cap < 0) {
    if (s.is_exact())
      throw InvalidWindow("compose_mobius of an exact series requires an explicit cap");
    cap = s.valid_hi();
  }
  // t = m(z) - c0 as a rational function of z, expanded about z = c0; the
  // fixed point makes it a series of order 1 in w = z - c0.
  RationalFunction t_rf = m.as_rational_function() - RationalFunction(Rational(c0));
  int lowest = std::min(s.valid_lo(), 0);
  int t_prec = cap + 2 * (-lowest + 1) + 4;
  LaurentSeries t = series_expand(t_rf, c0, 1, t_prec);
  return compose_series(s, t, cap);
}

LaurentSeries compose_rational_function(const RationalFunction& f, const LaurentSeries& s) {
  if (s.is_exact())
    throw InvalidWindow("compose_rational_function expects a truncated series argument");
  int cap = s.valid_hi();
  auto horner = [&](const Polynomial& p) {
    LaurentSeries acc = LaurentSeries::zero(s.center());
    for (int k = p.degree(); k >= 0; --k) {
      acc = (acc * s).truncate_to(cap);
      acc += LaurentSeries::constant(s.center(), p.coeff(k));
    }
    return acc;
  };
  LaurentSeries num = horner(f.num());
  LaurentSeries den = horner(f.den());
  return (num * den.inverse(cap)).truncate_to(cap);
}

LaurentSeries inverse_branch_series(const RationalFunction& x, const Rational& z0, int order) {
  if (order < 1) throw Error("inverse_branch_series needs order >= 1");
  bool simple = true;
  try {
    if (x.evaluate(z0) != 0) simple = false;
  } catch (const PoleEvaluation&) {
    simple = false;
  }
  Rational xp1(0);
  if (simple) {
    try {
      xp1 = x.derivative().evaluate(z0);
    } catch (const PoleEvaluation&) {
      simple = false;
    }
    if (xp1 == 0) simple = false;
  }
  if (!simple)
    throw NotSimpleZero("x does not have a simple zero at z = " + to_string(z0));

  LaurentSeries X = series_expand(x, z0, 0, order + 2);
  // Series in the output variable (exponents of x), center 0.
  LaurentSeries v = LaurentSeries::monomial(0, 1, Rational(1) / xp1);
  LaurentSeries target = LaurentSeries::monomial(0, 1, 1);
  LaurentSeries XP = series_expand(x.derivative(), z0, 0, order + 2);
  int rounds = 2;
  for (int n = 1; n < order; n *= 2) ++rounds;
  for (int it = 0; it < rounds + 2; ++it) {
    LaurentSeries err = (compose_series(X, v, order) - target).truncate_to(order);
    if (err.is_storage_zero()) break;
    LaurentSeries slope = compose_series(XP, v, order);
    v = (v - err * slope.inverse(order)).truncate_to(order);
  }
  LaurentSeries check = (compose_series(X, v, order) - target).truncate_to(order);
  if (!check.is_storage_zero())
    throw TruncationInsufficient("branch inversion did not converge to the requested order");
  return (v + LaurentSeries::constant(0, z0)).truncate_to(order);
}

}  // namespace mhn
