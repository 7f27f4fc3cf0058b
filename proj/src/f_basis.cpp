#include "mhn/f_basis.hpp"

#include <vector>

#include "mhn/laurent.hpp"

namespace mhn {

const RationalFunction& f_basis(unsigned a) {
    static std::vector<RationalFunction> cache;
    if (cache.empty()) {
        Polynomial z = Polynomial::variable();
        cache.emplace_back(Polynomial({2, -2}), z - Polynomial(2));  // -2(z-1)/(z-2)
    }
    while (cache.size() <= a) {
        Polynomial z = Polynomial::variable();
        RationalFunction step(-z * (z - Polynomial(1)), z - Polynomial(2));
        cache.push_back(step * cache.back().derivative());
    }
    return cache[a];
}

std::map<int, Rational> f_prime_pole_coeffs(unsigned a) {
    // f_a' has z = 2 as its only pole, so its expansion there terminates.
    LaurentSeries s = series_expand(f_basis(a).derivative(), 2, -2 * static_cast<int>(a) - 2, 0);
    std::map<int, Rational> out;
    for (int k = 2; k <= 2 * static_cast<int>(a) + 2; ++k) {
        Rational c = s.coeff(-k);
        if (c != 0) out[k] = c;
    }
    return out;
}

}  // namespace mhn
