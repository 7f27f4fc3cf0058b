#include "mhn/spectral.hpp"

#include <algorithm>
#include <iterator>

#include "mhn/errors.hpp"

namespace mhn {

SpectralCurve monotone_curve() {
    SpectralCurve c;
    c.x = RationalFunction(Polynomial({-1, 1}), Polynomial({0, 0, 1}));  // (z-1)/z^2
    c.y = RationalFunction(Polynomial({0, -1}));                         // -z
    c.alpha = 2;
    c.involution = MobiusMap{1, 0, 1, -1};  // z/(z-1)
    c.base_point_note = "residues taken at z = 2; kernel anchored at the pole of x";
    c.expansion_point = 1;
    return c;
}

SpectralCurve airy_curve() {
    SpectralCurve c;
    c.x = RationalFunction(Polynomial({0, 0, 1}));  // z^2
    c.y = RationalFunction(Polynomial({0, 1}));     // z
    c.alpha = 0;
    c.involution = MobiusMap{-1, 0, 0, 1};  // -z
    c.base_point_note = "residues taken at z = 0; kernel anchored at z = infinity";
    c.expansion_point = 0;
    return c;
}

void validate_curve(const SpectralCurve& c) {
    const RationalFunction xp = c.x.derivative();
    if (xp.num().degree() != 1)
        throw BranchPointInvalid("dx must have exactly one affine zero, of order one");
    if (xp.order_at(c.alpha) != 1)
        throw BranchPointInvalid("dx must vanish to order one at alpha");
    if (c.involution.is_identity())
        throw BranchPointInvalid("the deck transformation must not be the identity");
    if (!c.involution.is_involution())
        throw BranchPointInvalid("the deck transformation must be an involution");
    if (!c.involution.fixes(c.alpha))
        throw BranchPointInvalid("the deck transformation must fix alpha");
    if (!(c.x.compose_mobius(c.involution) == c.x))
        throw BranchPointInvalid("x must be invariant under the deck transformation");
    try {
        if (c.y.derivative().evaluate(c.alpha) == 0)
            throw BranchPointInvalid("dy must not vanish at alpha");
    } catch (const PoleEvaluation&) {
        throw BranchPointInvalid("y must be regular at alpha");
    }
}

Rational PoleBasisDifferential::coeff(const std::vector<int>& k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Rational(0) : it->second;
}

int PoleBasisDifferential::max_exponent() const {
    int m = 0;
    for (const auto& [k, c] : coeffs)
        for (int e : k) m = std::max(m, e);
    return m;
}

bool PoleBasisDifferential::is_symmetric() const {
    for (const auto& [k, c] : coeffs) {
        std::vector<int> s = k;
        std::sort(s.begin(), s.end());
        do {
            if (coeff(s) != c) return false;
        } while (std::next_permutation(s.begin(), s.end()));
    }
    return true;
}

namespace {

/// Exact local data of one curve at alpha, expanded to a fixed order.
class CurveContext {
 public:
    CurveContext(const SpectralCurve& c, int hi) : c_(c), hi_(hi) {
        const RationalFunction z = RationalFunction::variable();
        sigma_ = c.involution.as_rational_function();
        sigma_prime_ = sigma_.derivative();
        sigma_shift_ = sigma_ - RationalFunction(c.alpha);  // sigma(z) - alpha
        dev_ = z - sigma_;                                  // z - sigma(z)
        const RationalFunction xp = c.x.derivative();
        const RationalFunction y_bar = c.y.compose_mobius(c.involution);
        RationalFunction e = RationalFunction(Rational(1)) / ((c.y - y_bar) * xp);
        E_ = series_expand(e, c.alpha, 0, hi_);
        B_diag_ = series_expand(sigma_prime_ / (dev_ * dev_), c.alpha, 0, hi_);
    }

    const LaurentSeries& E() const { return E_; }
    const LaurentSeries& B_diag() const { return B_diag_; }

    /// (sigma(z) - alpha)^{-k} sigma'(z), the z-bar image of xi_k.
    const LaurentSeries& T(int k) {
        auto it = t_.find(k);
        if (it != t_.end()) return it->second;
        RationalFunction f = sigma_shift_.pow(-k) * sigma_prime_;
        return t_.emplace(k, series_expand(f, c_.alpha, 0, hi_)).first->second;
    }

    /// (sigma(z) - alpha)^{m} sigma'(z), the z-bar image of (z - alpha)^m dz.
    const LaurentSeries& U(int m) {
        auto it = u_.find(m);
        if (it != u_.end()) return it->second;
        RationalFunction f = sigma_shift_.pow(m) * sigma_prime_;
        return u_.emplace(m, series_expand(f, c_.alpha, 0, hi_)).first->second;
    }

    LaurentSeries monomial(int e) const {
        return LaurentSeries::monomial(c_.alpha, e, 1);
    }

 private:
    const SpectralCurve& c_;
    int hi_;
    RationalFunction sigma_, sigma_prime_, sigma_shift_, dev_;
    LaurentSeries E_, B_diag_;
    std::map<int, LaurentSeries> t_, u_;
};

/// One additive term of a recursion-kernel factor: a series in z (or the
/// z-bar transform), the exponents it pins on spectator slots, and a scale.
struct FactorTerm {
    LaurentSeries s;
    std::vector<std::pair<std::size_t, int>> spect;  // (spectator position, k)
    Rational c;
};

}  // namespace

OmegaCache::OmegaCache(SpectralCurve c) : curve_(std::move(c)) {
    validate_curve(curve_);
}

const PoleBasisDifferential& OmegaCache::omega(unsigned g, unsigned n) {
    if (2 * static_cast<int>(g) - 2 + static_cast<int>(n) < 1)
        throw NotStable("omega_{g,n} requires 2g - 2 + n >= 1");
    auto key = std::make_pair(g, n);
    auto it = store_.find(key);
    if (it != store_.end()) return it->second;
    PoleBasisDifferential value = compute(g, n);
    return store_.emplace(key, std::move(value)).first->second;
}

PoleBasisDifferential OmegaCache::compute(unsigned g, unsigned n) {
    const int k_out = 6 * static_cast<int>(g) - 4 + 2 * static_cast<int>(n);
    const int k_ext = k_out + 4;  // margin checked to vanish
    CurveContext ctx(curve_, k_ext);
    const std::size_t r = n - 1;  // spectator count

    std::map<std::vector<int>, LaurentSeries> buckets;
    auto add_to_bucket = [&](const std::vector<int>& key, const LaurentSeries& s) {
        auto it = buckets.find(key);
        if (it == buckets.end())
            buckets.emplace(key, s);
        else
            it->second = it->second + s;
    };

    // Expands one kernel factor omega_{gf, |pos|+1}(first, z_pos) into
    // additive terms; `bar` selects whether the first slot carries z-bar.
    auto factor_terms = [&](unsigned gf, const std::vector<std::size_t>& pos,
                            bool bar) {
        std::vector<FactorTerm> out;
        if (gf == 0 && pos.size() == 1) {
            // omega_{0,2}(first, z_i) summed over the pole order in z_i.
            for (int m = 0; m + 2 <= k_out + 2; ++m) {
                FactorTerm t;
                t.s = bar ? ctx.U(m) : ctx.monomial(m);
                t.spect = {{pos[0], m + 2}};
                t.c = m + 1;
                out.push_back(std::move(t));
            }
            return out;
        }
        const PoleBasisDifferential& sub = omega(gf, static_cast<unsigned>(pos.size()) + 1);
        for (const auto& [ks, c] : sub.coeffs) {
            FactorTerm t;
            t.s = bar ? ctx.T(ks[0]) : ctx.monomial(-ks[0]);
            for (std::size_t i = 0; i < pos.size(); ++i)
                t.spect.emplace_back(pos[i], ks[i + 1]);
            t.c = c;
            out.push_back(std::move(t));
        }
        return out;
    };

    // Genus-reducing term omega_{g-1, n+1}(z, z-bar, spectators).
    if (g >= 1) {
        if (g == 1 && n == 1) {
            add_to_bucket({}, ctx.B_diag());
        } else {
            const PoleBasisDifferential& sub = omega(g - 1, n + 1);
            for (const auto& [ks, c] : sub.coeffs) {
                LaurentSeries s = ctx.monomial(-ks[0]) * ctx.T(ks[1]);
                std::vector<int> key(ks.begin() + 2, ks.end());
                add_to_bucket(key, s.scale(c));
            }
        }
    }

    // Splitting terms omega_{g1}(z, z_I) omega_{g2}(z-bar, z_J) over ordered
    // (g1, I), excluding any omega_{0,1} factor.
    for (unsigned g1 = 0; g1 <= g; ++g1) {
        const unsigned g2 = g - g1;
        for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
            std::vector<std::size_t> I, J;
            for (std::size_t i = 0; i < r; ++i)
                ((mask >> i) & 1 ? I : J).push_back(i);
            if (g1 == 0 && I.empty()) continue;
            if (g2 == 0 && J.empty()) continue;
            for (const FactorTerm& t1 : factor_terms(g1, I, false)) {
                for (const FactorTerm& t2 : factor_terms(g2, J, true)) {
                    std::vector<int> key(r, 0);
                    for (const auto& [p, k] : t1.spect) key[p] = k;
                    for (const auto& [p, k] : t2.spect) key[p] = k;
                    LaurentSeries s = t1.s * t2.s;
                    add_to_bucket(key, s.scale(t1.c * t2.c));
                }
            }
        }
    }

    // Close each bucket against the kernel: c_j = -[w^{-j}] (bucket * E).
    PoleBasisDifferential out;
    out.g = g;
    out.n = n;
    for (auto& [key, b] : buckets) {
        const bool margin_bucket =
            std::any_of(key.begin(), key.end(), [&](int k) { return k > k_out; });
        LaurentSeries G = b.mul_window(ctx.E(), -1);
        if (G.coeff(-1) != 0)
            throw IdentityViolated("kernel residue must have no simple pole at alpha");
        const int j_max = std::max(k_ext, -G.valid_lo());
        for (int j = 2; j <= j_max; ++j) {
            Rational c = -G.coeff(-j);
            if (c == 0) continue;
            if (j > k_out)
                throw IdentityViolated("first-slot pole order exceeds 6g - 4 + 2n");
            if (margin_bucket)
                throw IdentityViolated("spectator pole order exceeds 6g - 4 + 2n");
            std::vector<int> tuple;
            tuple.reserve(n);
            tuple.push_back(j);
            tuple.insert(tuple.end(), key.begin(), key.end());
            out.coeffs[tuple] += c;
        }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
    return out;
}

Rational omega_to_hurwitz(OmegaCache& cache, unsigned g, const Partition& mu) {
    const Partition p = canonical_partition(mu);
    const unsigned n = static_cast<unsigned>(p.size());
    const PoleBasisDifferential& w = cache.omega(g, n);
    unsigned mu_max = p.empty() ? 1 : p.front();
    const int cap = static_cast<int>(mu_max) + 1;
    const SpectralCurve& c = cache.curve();
    LaurentSeries zs = inverse_branch_series(c.x, c.expansion_point, cap);
    LaurentSeries shifted = zs + LaurentSeries::constant(0, -c.alpha);
    LaurentSeries zp = zs.derivative();
    std::map<int, LaurentSeries> basis;  // k -> (z(x)-alpha)^{-k} z'(x)
    auto series_for = [&](int k) -> const LaurentSeries& {
        auto it = basis.find(k);
        if (it != basis.end()) return it->second;
        LaurentSeries s = shifted.pow_int(-k, cap) * zp;
        return basis.emplace(k, std::move(s)).first->second;
    };
    Rational total = 0;
    for (const auto& [ks, coeff] : w.coeffs) {
        Rational term = coeff;
        for (unsigned i = 0; i < n; ++i)
            term *= series_for(ks[i]).coeff(static_cast<int>(p[i]) - 1);
        total += term;
    }
    Rational parts = 1;
    for (unsigned part : p) parts *= part;
    return total / parts;
}

Rational tr_h01(const SpectralCurve& c, unsigned mu) {
    if (mu == 0) throw Error("(0,1) values need a positive ramification order");
    LaurentSeries zs = inverse_branch_series(c.x, c.expansion_point,
                                             static_cast<int>(mu) + 1);
    RationalFunction neg_y = c.y * Rational(-1);
    LaurentSeries s = compose_rational_function(neg_y, zs);
    return s.coeff(static_cast<int>(mu) - 1) / Rational(mu);
}

Rational tr_h02(const SpectralCurve& c, unsigned mu1, unsigned mu2) {
    if (mu1 == 0 || mu2 == 0)
        throw Error("(0,2) values need positive ramification orders");
    const int nu = static_cast<int>(mu2) - 1;
    const int hi = static_cast<int>(mu1) + 1;
    const int order = hi + nu + 3;
    LaurentSeries zs = inverse_branch_series(c.x, c.expansion_point, order);
    LaurentSeries zp = zs.derivative();
    LaurentSeries u = zs + LaurentSeries::constant(0, -c.expansion_point);
    // u = z(x) - z(0) has order 1, so [x^m] u^t = 0 for t > m.
    std::vector<LaurentSeries> upow;  // u^t for t = 0..nu
    upow.push_back(LaurentSeries::constant(0, 1));
    for (int t = 1; t <= nu; ++t) upow.push_back(upow.back() * u);
    // A(x1) = z'(x1) * sum_{n1+n2=nu} zp_{n1} sum_t (t+1) e_{t,n2} u(x1)^{-2-t}
    //         - (nu+1) x1^{-2-nu}
    LaurentSeries inner = LaurentSeries::zero(0);
    for (int n2 = 0; n2 <= nu; ++n2) {
        const int n1 = nu - n2;
        Rational zp_n1 = zp.coeff(n1);
        if (zp_n1 == 0) continue;
        for (int t = 0; t <= n2; ++t) {
            Rational e = upow[static_cast<std::size_t>(t)].coeff(n2);
            if (e == 0) continue;
            // the cap must leave room for the window lost per multiplication
            LaurentSeries power = u.pow_int(-2 - t, hi + 1 + nu);
            inner = inner + power.scale(zp_n1 * Rational(t + 1) * e);
        }
    }
    LaurentSeries A = (zp * inner) +
                      LaurentSeries::monomial(0, -2 - nu, -Rational(nu + 1));
    for (int e = -2 - nu; e <= -1; ++e)
        if (A.coeff(e) != 0)
            throw IdentityViolated("regularised cylinder kept a diagonal pole");
    return A.coeff(static_cast<int>(mu1) - 1) / Rational(mu1 * mu2);
}

Rational hurwitz_tr(OmegaCache& cache, unsigned g, const Partition& mu) {
    const Partition p = canonical_partition(mu);
    if (g == 0 && p.size() == 1) return tr_h01(cache.curve(), p[0]);
    if (g == 0 && p.size() == 2) return tr_h02(cache.curve(), p[0], p[1]);
    return omega_to_hurwitz(cache, g, p);
}

namespace {

/// Pole-basis image of xi_k(z) |-> -d/dz [ Q(z) (z - alpha)^{-k} ] dz.
/// Valid only when the bracket has poles at alpha alone and at most a
/// constant regular part, so the derivative stays in the pole basis.
std::map<int, Rational> slot_transform(const RationalFunction& Q,
                                       const Rational& alpha, int k) {
    RationalFunction pole(Polynomial(Rational(1)),
                          Polynomial({Rational(-alpha), Rational(1)}));
    RationalFunction R = Q * pole.pow(k);
    if (R.num().degree() - R.den().degree() >= 1)
        throw IdentityViolated("slot transform produced a polynomial part");
    LaurentSeries s = series_expand(R, alpha, 0, 4);
    if (!s.is_exact())
        throw IdentityViolated("slot transform left the pole basis");
    LaurentSeries d = s.derivative();
    std::map<int, Rational> out;
    if (d.is_storage_zero()) return out;
    if (d.coeff(-1) != 0)
        throw IdentityViolated("slot transform produced a simple pole");
    for (int e = d.order(); e <= -2; ++e) {
        Rational c = d.coeff(e);
        if (c != 0) out[-e] = -c;
    }
    return out;
}

std::map<std::vector<int>, Rational> apply_slot_transforms(
    const PoleBasisDifferential& w,
    const std::map<int, std::map<int, Rational>>& transform) {
    std::map<std::vector<int>, Rational> out;
    for (const auto& [ks, c] : w.coeffs) {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const auto& column = transform.at(ks[i]);
            for (const auto& [j, t] : column) {
                std::vector<int> tuple = ks;
                tuple[static_cast<std::size_t>(i)] = j;
                out[tuple] += c * t;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

/// Residues sum_alpha Res f(z) omega_{g,n+1}(z, spectators) as a tensor in
/// the spectators: contract the first slot against the series of f at alpha.
std::map<std::vector<int>, Rational> contract_first_slot(
    const PoleBasisDifferential& w, const LaurentSeries& f) {
    std::map<std::vector<int>, Rational> out;
    for (const auto& [ks, c] : w.coeffs) {
        Rational weight = f.coeff(ks[0] - 1);  // Res xi_k f = [w^{k-1}] f
        if (weight == 0) continue;
        std::vector<int> rest(ks.begin() + 1, ks.end());
        out[rest] += c * weight;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

void require_equal(const std::map<std::vector<int>, Rational>& lhs,
                   const std::map<std::vector<int>, Rational>& rhs,
                   const char* what) {
    if (lhs == rhs) return;
    throw IdentityViolated(std::string(what) + " failed");
}

}  // namespace

void string_dilaton_residue_check(OmegaCache& cache, unsigned g, unsigned n) {
    const SpectralCurve& c = cache.curve();
    const PoleBasisDifferential& base = cache.omega(g, n);
    const PoleBasisDifferential& lift = cache.omega(g, n + 1);
    const int k_max = lift.max_exponent();
    const int hi = std::max(k_max, 2);

    LaurentSeries y_s = series_expand(c.y, c.alpha, 0, hi);
    LaurentSeries xy_s = series_expand(c.x * c.y, c.alpha, 0, hi);
    RationalFunction xp = c.x.derivative();
    LaurentSeries phi = series_expand(c.y * xp, c.alpha, -1, hi - 1).antiderivative();

    RationalFunction one_over_xp = RationalFunction(Rational(1)) / xp;
    RationalFunction x_over_xp = c.x / xp;

    std::map<int, std::map<int, Rational>> t1, t2;
    for (const auto& [ks, coeff] : base.coeffs) {
        for (int k : ks) {
            if (!t1.count(k)) t1[k] = slot_transform(one_over_xp, c.alpha, k);
            if (!t2.count(k)) t2[k] = slot_transform(x_over_xp, c.alpha, k);
        }
    }

    require_equal(contract_first_slot(lift, y_s),
                  apply_slot_transforms(base, t1), "first string equation");
    require_equal(contract_first_slot(lift, xy_s),
                  apply_slot_transforms(base, t2), "second string equation");

    std::map<std::vector<int>, Rational> scaled;
    const Rational euler = 2 * static_cast<int>(g) - 2 + static_cast<int>(n);
    for (const auto& [ks, coeff] : base.coeffs) scaled[ks] = coeff * euler;
    for (auto it = scaled.begin(); it != scaled.end();)
        it = (it->second == 0) ? scaled.erase(it) : std::next(it);
    require_equal(contract_first_slot(lift, phi), scaled, "dilaton equation");
}

}  // namespace mhn
