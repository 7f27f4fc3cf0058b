#include <doctest.h>

#include "mhn/f_basis.hpp"
#include "mhn/laurent.hpp"
#include "mhn/rational.hpp"

using namespace mhn;

namespace {

const Polynomial z = Polynomial::variable();
const RationalFunction x_map(z - Polynomial(1), z * z);

Polynomial poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Polynomial(c);
}

Polynomial pole_power(int k) {  // (z-2)^k
    Polynomial p(1);
    for (int i = 0; i < k; ++i) p = p * (z - Polynomial(2));
    return p;
}

Rational residue_at_2(const RationalFunction& f) {
    int lo = std::min(f.order_at(2), -1);
    return series_expand(f, 2, lo, 0).residue();
}

}  // namespace

TEST_CASE("basis functions match the frozen closed forms") {
    Polynomial pref = poly({0, 2, -2});  // -2 z (z-1)
    CHECK(f_basis(0) == RationalFunction(poly({2, -2}), pole_power(1)));
    CHECK(f_basis(1) == RationalFunction(pref, pole_power(3)));
    CHECK(f_basis(2) == RationalFunction(pref * poly({-2, 2, 1}), pole_power(5)));
    CHECK(f_basis(3) == RationalFunction(pref * poly({4, -8, -6, 10, 1}), pole_power(7)));
    CHECK(f_basis(4) ==
          RationalFunction(pref * poly({-8, 24, 48, -136, 42, 30, 1}), pole_power(9)));
    CHECK(f_basis(5) ==
          RationalFunction(pref * poly({16, -64, -368, 1328, -860, -568, 442, 74, 1}),
                           pole_power(11)));
}

TEST_CASE("basis functions have a single pole of odd order") {
    for (unsigned a = 0; a <= 6; ++a) {
        CAPTURE(a);
        CHECK(f_basis(a).den() == pole_power(2 * static_cast<int>(a) + 1));
        CHECK(f_basis(a).order_at(2) == -(2 * static_cast<int>(a) + 1));
        CHECK(f_basis(a).num().degree() == (a == 0 ? 1 : 2 * static_cast<int>(a)));
    }
}

TEST_CASE("derivative pole decompositions") {
    auto c0 = f_prime_pole_coeffs(0);
    CHECK(c0 == std::map<int, Rational>{{2, Rational(2)}});
    auto c1 = f_prime_pole_coeffs(1);
    CHECK(c1 == std::map<int, Rational>{{2, Rational(2)}, {3, Rational(12)}, {4, Rational(12)}});

    // the decomposition reassembles the derivative exactly
    for (unsigned a = 0; a <= 5; ++a) {
        RationalFunction sum;
        for (const auto& [k, c] : f_prime_pole_coeffs(a))
            sum += RationalFunction(Polynomial(c), pole_power(k));
        CAPTURE(a);
        CHECK(sum == f_basis(a).derivative());
    }
}

TEST_CASE("generating series coefficients on the branch through z = 1") {
    LaurentSeries zs = inverse_branch_series(x_map, 1, 8);
    for (unsigned a = 0; a <= 4; ++a) {
        LaurentSeries fa = compose_rational_function(f_basis(a), zs);
        CAPTURE(a);
        CHECK(fa.coeff(0) == 0);
        for (unsigned mu = 1; mu <= 6; ++mu) {
            CAPTURE(mu);
            CHECK(fa.coeff(static_cast<int>(mu)) ==
                  Rational(central_binomial(mu) * pow_integer(mu, a)));
        }
    }
}

TEST_CASE("residue lemma") {
    RationalFunction zsq(Polynomial(1), z * z);
    RationalFunction inv_pole(Polynomial(1), z - Polynomial(2));
    for (unsigned a = 1; a <= 6; ++a)
        for (int d = -1; d <= 6; ++d) {
            RationalFunction f = f_basis(a) * zsq * inv_pole.pow(d);
            CAPTURE(a);
            CAPTURE(d);
            CHECK(residue_at_2(f) == pow_rational(Rational(-1, 2), a + d + 1));
        }
    // the a = 0 analogue at d = -1 degenerates to zero
    CHECK(residue_at_2(f_basis(0) * zsq * RationalFunction(pole_power(1))) == 0);
}

TEST_CASE("involution symmetry and value at zero") {
    MobiusMap sigma(1, 0, 1, -1);  // z -> z/(z-1)
    CHECK(f_basis(0).compose_mobius(sigma) + f_basis(0) == RationalFunction(Rational(-2)));
    for (unsigned a = 1; a <= 5; ++a) {
        CAPTURE(a);
        CHECK(f_basis(a).compose_mobius(sigma) + f_basis(a) == RationalFunction());
        CHECK(f_basis(a).evaluate(0) == 0);
    }
    CHECK(f_basis(0).evaluate(0) == -1);
}
