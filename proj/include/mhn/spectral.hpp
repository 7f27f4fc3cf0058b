#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhn/laurent.hpp"
#include "mhn/mobius.hpp"
#include "mhn/partition.hpp"

namespace mhn {

/// Input data for the residue recursion: a rational curve (x, y) on CP^1
/// whose x has a single simple critical point at alpha, with the deck
/// transformation of x around it given by a global Moebius involution.
struct SpectralCurve {
    RationalFunction x, y;
    Rational alpha;            // the zero of dx/dz
    MobiusMap involution = MobiusMap::identity();  // z -> z-bar, x(z-bar) = x(z)
    std::string base_point_note;
    Rational expansion_point;  // simple zero of x anchoring power-series expansions
};

/// x = (z-1)/z^2, y = -z; critical point alpha = 2, involution z/(z-1),
/// expansions on the branch through z = 1.
SpectralCurve monotone_curve();

/// x = z^2, y = z; critical point alpha = 0, involution -z.
SpectralCurve airy_curve();

/// Checks the curve invariants symbolically: dx has exactly one affine zero,
/// simple, at alpha; the involution is a non-identity involution fixing
/// alpha; x is invariant under it; y is regular with dy(alpha) != 0.
/// Throws BranchPointInvalid naming the violated condition.
void validate_curve(const SpectralCurve& c);

/// A correlation differential stored exactly in the pole basis
/// xi_k(z) = dz/(z - alpha)^k:
///   omega_{g,n} = sum over tuples (k_1..k_n) of coeffs * prod xi_{k_i}(z_i).
/// The map stores every ordered tuple (the symmetric closure), only nonzero
/// coefficients, each k_i >= 2.
struct PoleBasisDifferential {
    unsigned g = 0, n = 0;
    std::map<std::vector<int>, Rational> coeffs;

    Rational coeff(const std::vector<int>& k) const;
    int max_exponent() const;  // 0 for an empty tensor
    bool is_symmetric() const;
};

/// Memoised recursion engine for one validated curve.
class OmegaCache {
 public:
    explicit OmegaCache(SpectralCurve c);

    /// Stable correlation differential; computes and caches all lower levels.
    /// Throws NotStable when 2g - 2 + n < 1.
    const PoleBasisDifferential& omega(unsigned g, unsigned n);

    const SpectralCurve& curve() const { return curve_; }

 private:
    PoleBasisDifferential compute(unsigned g, unsigned n);

    SpectralCurve curve_;
    std::map<std::pair<unsigned, unsigned>, PoleBasisDifferential> store_;
};

/// Reads a Hurwitz number off a stable differential: the coefficient of
/// prod x_i^{mu_i - 1} dx_i in omega, divided by prod mu_i, via the branch
/// series z(x) at the curve's expansion point.
Rational omega_to_hurwitz(OmegaCache& cache, unsigned g, const Partition& mu);

/// Unstable (0,1) value from omega_{0,1} = y dx expanded in x.
Rational tr_h01(const SpectralCurve& c, unsigned mu);

/// Unstable (0,2) value from the regularised cylinder differential
/// B(z(x_1), z(x_2)) - dx_1 dx_2/(x_1 - x_2)^2.
Rational tr_h02(const SpectralCurve& c, unsigned mu1, unsigned mu2);

/// Dispatches to tr_h01 / tr_h02 / omega_to_hurwitz by stability.
Rational hurwitz_tr(OmegaCache& cache, unsigned g, const Partition& mu);

/// Verifies the two string equations and the dilaton equation relating
/// omega_{g,n+1} to omega_{g,n} by exact residue calculus at alpha.
/// Throws IdentityViolated with the first mismatching tensor entry.
void string_dilaton_residue_check(OmegaCache& cache, unsigned g, unsigned n);

}  // namespace mhn
