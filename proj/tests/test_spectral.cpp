#include "mhn/spectral.hpp"

#include <map>
#include <vector>

#include "doctest.h"
#include "mhn/cutjoin.hpp"
#include "mhn/errors.hpp"

using namespace mhn;

namespace {

using Tensor = std::map<std::vector<int>, Rational>;

Rational q(long num, long den) { return make_rational(num, den); }

}  // namespace

TEST_CASE("curve validation accepts the two bundled curves") {
    CHECK_NOTHROW(validate_curve(monotone_curve()));
    CHECK_NOTHROW(validate_curve(airy_curve()));
}

TEST_CASE("curve validation rejects broken input") {
    SUBCASE("higher-order critical point") {
        SpectralCurve c = airy_curve();
        c.x = RationalFunction(Polynomial({0, 0, 0, 1}));  // z^3
        CHECK_THROWS_AS(validate_curve(c), BranchPointInvalid);
    }
    SUBCASE("identity deck transformation") {
        SpectralCurve c = airy_curve();
        c.involution = MobiusMap::identity();
        CHECK_THROWS_AS(validate_curve(c), BranchPointInvalid);
    }
    SUBCASE("map that is not an involution") {
        SpectralCurve c = airy_curve();
        c.involution = MobiusMap(2, 0, 0, 1);  // z -> 2z fixes 0 but squares to 4z
        CHECK_THROWS_AS(validate_curve(c), BranchPointInvalid);
    }
    SUBCASE("involution missing the critical point") {
        SpectralCurve c = monotone_curve();
        c.involution = MobiusMap(-1, 0, 0, 1);  // z -> -z fixes 0, not 2
        CHECK_THROWS_AS(validate_curve(c), BranchPointInvalid);
    }
    SUBCASE("involution that does not preserve x") {
        SpectralCurve c = airy_curve();
        c.x = RationalFunction(Polynomial({0, 0, 0, 0, 1}));  // z^4: dx fails first
        CHECK_THROWS_AS(validate_curve(c), BranchPointInvalid);
        // make dx degree-1 again but break invariance instead
        c = monotone_curve();
        c.involution = MobiusMap(1, 0, 1, -1);
        c.x = RationalFunction(Polynomial({-1, 1}), Polynomial({0, 0, 0, 1}));
        CHECK_THROWS_AS(validate_curve(c), BranchPointInvalid);
    }
    SUBCASE("vanishing dy at the critical point") {
        SpectralCurve c = monotone_curve();
        c.y = RationalFunction(Polynomial({4, -4, 1}));  // (z-2)^2
        CHECK_THROWS_AS(validate_curve(c), BranchPointInvalid);
    }
    SUBCASE("cache constructor validates") {
        SpectralCurve c = airy_curve();
        c.x = RationalFunction(Polynomial({0, 0, 0, 1}));
        CHECK_THROWS_AS(OmegaCache cache(c), BranchPointInvalid);
    }
}

TEST_CASE("unstable levels are rejected by the cache") {
    OmegaCache cache(monotone_curve());
    CHECK_THROWS_AS(cache.omega(0, 1), NotStable);
    CHECK_THROWS_AS(cache.omega(0, 2), NotStable);
}

TEST_CASE("first stable differentials of the x=(z-1)/z^2 curve") {
    OmegaCache cache(monotone_curve());

    const PoleBasisDifferential& w03 = cache.omega(0, 3);
    CHECK(w03.coeffs == Tensor{{{2, 2, 2}, Rational(8)}});

    const PoleBasisDifferential& w11 = cache.omega(1, 1);
    CHECK(w11.coeffs == Tensor{{{3}, Rational(1)}, {{4}, Rational(1)}});
}

TEST_CASE("first stable differentials of the x=z^2 curve") {
    OmegaCache cache(airy_curve());

    CHECK(cache.omega(0, 3).coeffs == Tensor{{{2, 2, 2}, q(1, 2)}});
    CHECK(cache.omega(1, 1).coeffs == Tensor{{{4}, q(1, 16)}});

    // Coefficients of higher levels encode psi-class intersection numbers:
    // c(k) = integral * prod (2a_i + 1)!! / 2^(2g-2+n) at k_i = 2a_i + 2.
    CHECK(cache.omega(0, 4).coeffs ==
          Tensor{{{4, 2, 2, 2}, q(3, 4)},
                 {{2, 4, 2, 2}, q(3, 4)},
                 {{2, 2, 4, 2}, q(3, 4)},
                 {{2, 2, 2, 4}, q(3, 4)}});
    CHECK(cache.omega(1, 2).coeffs ==
          Tensor{{{6, 2}, q(5, 32)},
                 {{2, 6}, q(5, 32)},
                 {{4, 4}, q(3, 32)}});
    CHECK(cache.omega(2, 1).coeffs == Tensor{{{10}, q(105, 1024)}});
}

TEST_CASE("computed tensors are symmetric with bounded even-margin poles") {
    for (bool airy : {false, true}) {
        CAPTURE(airy);
        OmegaCache cache(airy ? airy_curve() : monotone_curve());
        for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{
                 {0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}, {0, 5}, {1, 3}}) {
            CAPTURE(g);
            CAPTURE(n);
            const PoleBasisDifferential& w = cache.omega(g, n);
            CHECK(w.is_symmetric());
            CHECK(w.max_exponent() <= 6 * static_cast<int>(g) - 4 + 2 * static_cast<int>(n));
            for (const auto& [ks, c] : w.coeffs) {
                for (int k : ks) CHECK(k >= 2);
                CHECK(c != 0);
                if (airy)
                    for (int k : ks) CHECK(k % 2 == 0);
            }
        }
    }
}

TEST_CASE("each slot changes sign under the deck transformation") {
    // sum_k c_k (w^{-k} + pullback of xi_k) must vanish identically.
    for (bool airy : {false, true}) {
        CAPTURE(airy);
        SpectralCurve curve = airy ? airy_curve() : monotone_curve();
        OmegaCache cache(curve);
        RationalFunction sigma = curve.involution.as_rational_function();
        RationalFunction sigma_prime = sigma.derivative();
        RationalFunction shift = sigma - RationalFunction(curve.alpha);
        for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{
                 {0, 3}, {1, 1}, {1, 2}}) {
            const PoleBasisDifferential& w = cache.omega(g, n);
            const int hi = w.max_exponent() + 2;
            std::map<std::vector<int>, LaurentSeries> groups;
            for (const auto& [ks, c] : w.coeffs) {
                std::vector<int> rest(ks.begin() + 1, ks.end());
                LaurentSeries term =
                    LaurentSeries::monomial(curve.alpha, -ks[0], c) +
                    series_expand(shift.pow(-ks[0]) * sigma_prime, curve.alpha, 0, hi)
                        .scale(c);
                auto it = groups.find(rest);
                if (it == groups.end())
                    groups.emplace(rest, term);
                else
                    it->second += term;
            }
            for (const auto& [rest, s] : groups) CHECK(s.is_storage_zero());
        }
    }
}

TEST_CASE("residue pipeline agrees with the recursion pipeline") {
    OmegaCache cache(monotone_curve());
    HurwitzTable table;
    std::vector<std::pair<unsigned, Partition>> probes = {
        {0, {1, 1, 1}},   {0, {2, 1, 1}}, {0, {3, 2, 1}}, {0, {1, 1, 1, 1}},
        {0, {4, 2, 1}},   {1, {1}},       {1, {2}},       {1, {3}},
        {1, {1, 1}},      {1, {2, 2}},    {1, {3, 2}},    {2, {1}},
        {2, {2}},         {1, {1, 1, 1}}, {2, {2, 1}}};
    for (const auto& [g, mu] : probes) {
        CAPTURE(g);
        CAPTURE(partition_to_string(mu));
        CHECK(omega_to_hurwitz(cache, g, mu) == table.get(g, mu));
    }
}

TEST_CASE("expansion of y dx reproduces the one-part planar numbers") {
    SpectralCurve c = monotone_curve();
    for (unsigned mu = 1; mu <= 6; ++mu) {
        CAPTURE(mu);
        CHECK(tr_h01(c, mu) == h01(mu));
    }
    CHECK_THROWS_AS(tr_h01(c, 0), Error);
}

TEST_CASE("regularised cylinder reproduces the two-part planar numbers") {
    SpectralCurve c = monotone_curve();
    for (unsigned a = 1; a <= 5; ++a)
        for (unsigned b = 1; b <= 5; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(tr_h02(c, a, b) == h02(a, b));
        }
    CHECK_THROWS_AS(tr_h02(c, 0, 1), Error);
}

TEST_CASE("the dispatching front end covers stable and unstable input") {
    OmegaCache cache(monotone_curve());
    HurwitzTable table;
    CHECK(hurwitz_tr(cache, 0, {4}) == h01(4));
    CHECK(hurwitz_tr(cache, 0, {3, 2}) == h02(3, 2));
    CHECK(hurwitz_tr(cache, 1, {2, 1}) == table.get(1, {2, 1}));
    CHECK(hurwitz_tr(cache, 0, {2, 2, 1}) == table.get(0, {2, 2, 1}));
}

TEST_CASE("string and dilaton residue identities hold on both curves") {
    for (bool airy : {false, true}) {
        CAPTURE(airy);
        OmegaCache cache(airy ? airy_curve() : monotone_curve());
        for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{
                 {0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
            CAPTURE(g);
            CAPTURE(n);
            CHECK_NOTHROW(string_dilaton_residue_check(cache, g, n));
        }
    }
}

TEST_CASE("caching returns identical tensors across calls and instances") {
    OmegaCache cache(monotone_curve());
    const PoleBasisDifferential& a = cache.omega(1, 2);
    const PoleBasisDifferential& b = cache.omega(1, 2);
    CHECK(&a == &b);
    OmegaCache fresh(monotone_curve());
    CHECK(fresh.omega(1, 2).coeffs == a.coeffs);
}
