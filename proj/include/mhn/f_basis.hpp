#pragma once

#include <map>

#include "mhn/rational_function.hpp"

namespace mhn {

/// Basis functions for the polynomial structure on the curve x = (z-1)/z^2:
///   f_0 = -2(z-1)/(z-2),   f_a = (-z(z-1)/(z-2)) f_{a-1}'.
/// On the branch through z = 1 they generate sum_mu binom(2mu,mu) mu^a x^mu;
/// f_a is rational with its only pole at z = 2, of order 2a + 1.
const RationalFunction& f_basis(unsigned a);

/// Exact pole decomposition of the derivative:
/// f_a' = sum_k c_k (z-2)^{-k} with k running over 2 .. 2a+2.
std::map<int, Rational> f_prime_pole_coeffs(unsigned a);

}  // namespace mhn
