#pragma once

#include <functional>
#include <map>
#include <vector>

#include "mhn/f_basis.hpp"
#include "mhn/partition.hpp"
#include "mhn/spectral.hpp"

namespace mhn {

/// The monomial coefficients of the symmetric polynomial P_{g,n}:
///   P_{g,n}(mu) = sum over tuples (a_1..a_n) of coeffs * prod mu_i^{a_i},
/// stored on every ordered tuple (the symmetric closure), only nonzero
/// entries, with sum a_i <= 3g - 3 + n.
struct CoefficientTensor {
    unsigned g = 0, n = 0;
    std::map<std::vector<unsigned>, Rational> coeffs;

    Rational coeff(const std::vector<unsigned>& a) const;
    bool is_symmetric() const;
    /// Largest total degree carried by a nonzero monomial; -1 when empty.
    int total_degree() const;
};

/// Change of basis from the pole basis to the derivative basis {d f_a}:
/// solves each tensor slot by back-substitution on the top (even) pole
/// orders 2a + 2 and requires every remaining order to cancel exactly.
/// Throws BasisMembershipViolated when the input is not representable or
/// breaks the degree bound.
CoefficientTensor omega_to_C(const PoleBasisDifferential& w);

/// Exact evaluation of P at arbitrary rational arguments (arity must be n).
Rational evaluate_P(const CoefficientTensor& t, const std::vector<Rational>& args);

/// prod binom(2 mu_i, mu_i) * P(mu): the closed polynomial form of the
/// Hurwitz number.
Rational hurwitz_from_P(const CoefficientTensor& t, const Partition& mu);

/// Verifies, coefficient-by-coefficient as polynomial identities,
///   P_{g,n+1}(-1/2, mu) = 2 (mu_1 + ... + mu_n) P_{g,n}(mu)   and
///   P_{g,n+1}(0, mu) - P_{g,n+1}(-1/2, mu) = (2g - 2 + n) P_{g,n}(mu).
/// Throws IdentityViolated naming the offending monomial.
void p_level_string_dilaton(unsigned g, unsigned n,
                            const CoefficientTensor& c_np1,
                            const CoefficientTensor& c_n);

/// Top-degree coefficients divided by 2^{3g-3+n}: candidate psi-class
/// intersection numbers on the moduli space of curves.
std::map<std::vector<unsigned>, Rational> leading_intersection_numbers(
    const CoefficientTensor& t);

/// Inverts the z^2-curve dictionary on an Airy differential: entry at
/// k_i = 2 a_i + 2 maps to integral of psi^a =
/// coeff * 2^{2g-2+n} / prod (2 a_i + 1)!!. Odd pole orders are an error.
std::map<std::vector<unsigned>, Rational> airy_intersection_numbers(
    const PoleBasisDifferential& w);

/// Independent route to the same tensor: fits a symmetric polynomial of
/// degree 3g - 3 + n through Hurwitz values divided by prod binom(2mu,mu)
/// on an integer grid, by exact Gaussian elimination.
CoefficientTensor interpolate_P(
    unsigned g, unsigned n,
    const std::function<Rational(unsigned, const Partition&)>& hurwitz);

}  // namespace mhn
