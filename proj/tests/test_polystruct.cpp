#include "mhn/polystruct.hpp"

#include <map>
#include <vector>

#include "doctest.h"
#include "mhn/cutjoin.hpp"
#include "mhn/errors.hpp"

using namespace mhn;

namespace {

using ATuple = std::vector<unsigned>;
using CTable = std::map<ATuple, Rational>;

Rational q(long num, long den) { return make_rational(num, den); }

CTable frozen_C(unsigned g, unsigned n) {
    if (g == 0 && n == 3) return {{{0, 0, 0}, Rational(1)}};
    if (g == 0 && n == 4)
        return {{{0, 0, 0, 0}, Rational(1)},
                {{1, 0, 0, 0}, Rational(2)},
                {{0, 1, 0, 0}, Rational(2)},
                {{0, 0, 1, 0}, Rational(2)},
                {{0, 0, 0, 1}, Rational(2)}};
    if (g == 1 && n == 1) return {{{0}, q(-1, 12)}, {{1}, q(1, 12)}};
    if (g == 1 && n == 2)
        return {{{0, 0}, q(-1, 12)}, {{1, 0}, q(-1, 12)}, {{0, 1}, q(-1, 12)},
                {{1, 1}, q(1, 6)},   {{2, 0}, q(1, 6)},   {{0, 2}, q(1, 6)}};
    if (g == 2 && n == 1)
        return {{{0}, q(1, 120)},  {{1}, q(7, 720)}, {{2}, q(-1, 45)},
                {{3}, q(-7, 720)}, {{4}, q(1, 72)}};
    return {};
}

CoefficientTensor tensor_from_residues(OmegaCache& cache, unsigned g, unsigned n) {
    return omega_to_C(cache.omega(g, n));
}

}  // namespace

TEST_CASE("derivative-basis conversion matches the worked examples") {
    OmegaCache cache(monotone_curve());
    CHECK(tensor_from_residues(cache, 1, 1).coeffs == frozen_C(1, 1));
    CHECK(tensor_from_residues(cache, 0, 3).coeffs == frozen_C(0, 3));

    PoleBasisDifferential empty;
    empty.g = 1;
    empty.n = 1;
    CHECK(omega_to_C(empty).coeffs.empty());
}

TEST_CASE("polynomial tables for the five smallest levels") {
    OmegaCache cache(monotone_curve());
    for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{
             {0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) {
        CAPTURE(g);
        CAPTURE(n);
        CHECK(tensor_from_residues(cache, g, n).coeffs == frozen_C(g, n));
    }
}

TEST_CASE("conversion rejects tensors outside the derivative basis") {
    SUBCASE("odd order with no even partner") {
        PoleBasisDifferential w;
        w.g = 1;
        w.n = 1;
        w.coeffs[{3}] = 1;  // pure xi_3 cannot arise from any d f_a combination
        CHECK_THROWS_AS(omega_to_C(w), BasisMembershipViolated);
    }
    SUBCASE("pole order above the degree bound") {
        PoleBasisDifferential w;
        w.g = 1;
        w.n = 1;
        w.coeffs[{6}] = 1;  // order 6 needs a = 2 > 3g-3+n = 1
        CHECK_THROWS_AS(omega_to_C(w), BasisMembershipViolated);
    }
    SUBCASE("unstable level") {
        PoleBasisDifferential w;
        w.g = 0;
        w.n = 2;
        CHECK_THROWS_AS(omega_to_C(w), NotStable);
    }
}

TEST_CASE("polynomial evaluation agrees with the printed rows") {
    OmegaCache cache(monotone_curve());
    CoefficientTensor p04 = tensor_from_residues(cache, 0, 4);
    CHECK(evaluate_P(p04, {1, 1, 1, 1}) == 9);
    CoefficientTensor p11 = tensor_from_residues(cache, 1, 1);
    CHECK(evaluate_P(p11, {Rational(1)}) == 0);
    CoefficientTensor p21 = tensor_from_residues(cache, 2, 1);
    CHECK(evaluate_P(p21, {Rational(1)}) == 0);
    CHECK_THROWS_AS(evaluate_P(p11, {1, 2}), ArityMismatch);
    CHECK_THROWS_AS(evaluate_P(p04, {}), ArityMismatch);
}

TEST_CASE("tensors are symmetric with total degree exactly 3g-3+n") {
    OmegaCache cache(monotone_curve());
    for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{
             {0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
        CAPTURE(g);
        CAPTURE(n);
        CoefficientTensor t = tensor_from_residues(cache, g, n);
        CHECK(t.is_symmetric());
        CHECK(t.total_degree() == 3 * static_cast<int>(g) - 3 + static_cast<int>(n));
    }
}

TEST_CASE("closed polynomial form reproduces the recursion pipeline") {
    OmegaCache cache(monotone_curve());
    HurwitzTable table;
    std::vector<std::pair<unsigned, Partition>> probes = {
        {0, {1, 1, 1}},    {0, {6, 1, 1}},    {0, {5, 4, 3}}, {0, {2, 2, 2, 2}},
        {0, {6, 4, 2, 1}}, {1, {1}},          {1, {6}},       {1, {5, 3}},
        {1, {2, 2, 2}},    {2, {1}},          {2, {6}},       {0, {3, 3, 1, 1, 1}},
        {1, {4, 2, 1}}};
    for (const auto& [g, mu] : probes) {
        CAPTURE(g);
        CAPTURE(partition_to_string(mu));
        CoefficientTensor t =
            tensor_from_residues(cache, g, static_cast<unsigned>(mu.size()));
        CHECK(hurwitz_from_P(t, mu) == table.get(g, mu));
    }
}

TEST_CASE("string and dilaton hold as exact polynomial identities") {
    OmegaCache cache(monotone_curve());
    for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{
             {0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
        CAPTURE(g);
        CAPTURE(n);
        CoefficientTensor lifted = tensor_from_residues(cache, g, n + 1);
        CoefficientTensor base = tensor_from_residues(cache, g, n);
        CHECK_NOTHROW(p_level_string_dilaton(g, n, lifted, base));
    }
}

TEST_CASE("perturbed tensors make the polynomial identities fail loudly") {
    OmegaCache cache(monotone_curve());
    CoefficientTensor lifted = tensor_from_residues(cache, 0, 4);
    CoefficientTensor base = tensor_from_residues(cache, 0, 3);
    lifted.coeffs[{0, 0, 0, 0}] += 1;
    CHECK_THROWS_AS(p_level_string_dilaton(0, 3, lifted, base), IdentityViolated);
    CHECK_THROWS_AS(p_level_string_dilaton(1, 3, lifted, base), ArityMismatch);
}

TEST_CASE("leading coefficients are the psi-class intersection numbers") {
    OmegaCache cache(monotone_curve());
    CHECK(leading_intersection_numbers(tensor_from_residues(cache, 1, 1)) ==
          CTable{{{1}, q(1, 24)}});
    CHECK(leading_intersection_numbers(tensor_from_residues(cache, 0, 3)) ==
          CTable{{{0, 0, 0}, Rational(1)}});
    CHECK(leading_intersection_numbers(tensor_from_residues(cache, 0, 4)) ==
          CTable{{{1, 0, 0, 0}, Rational(1)},
                 {{0, 1, 0, 0}, Rational(1)},
                 {{0, 0, 1, 0}, Rational(1)},
                 {{0, 0, 0, 1}, Rational(1)}});
    CHECK(leading_intersection_numbers(tensor_from_residues(cache, 1, 2)) ==
          CTable{{{2, 0}, q(1, 24)}, {{0, 2}, q(1, 24)}, {{1, 1}, q(1, 24)}});
    CHECK(leading_intersection_numbers(tensor_from_residues(cache, 2, 1)) ==
          CTable{{{4}, q(1, 1152)}});
}

TEST_CASE("both geometric dictionaries produce the same intersection numbers") {
    OmegaCache monotone(monotone_curve());
    OmegaCache airy(airy_curve());
    for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{
             {0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
        CAPTURE(g);
        CAPTURE(n);
        auto from_leading =
            leading_intersection_numbers(tensor_from_residues(monotone, g, n));
        auto from_airy = airy_intersection_numbers(airy.omega(g, n));
        CHECK(from_leading == from_airy);
    }
}

TEST_CASE("airy inversion rejects odd pole orders") {
    PoleBasisDifferential w;
    w.g = 1;
    w.n = 1;
    w.coeffs[{3}] = 1;
    CHECK_THROWS_AS(airy_intersection_numbers(w), IdentityViolated);
}

TEST_CASE("grid interpolation rebuilds the same polynomials independently") {
    OmegaCache cache(monotone_curve());
    HurwitzTable table;
    auto source = [&table](unsigned g, const Partition& mu) {
        return table.get(g, mu);
    };
    for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{
             {0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
        CAPTURE(g);
        CAPTURE(n);
        CoefficientTensor fitted = interpolate_P(g, n, source);
        CoefficientTensor converted = tensor_from_residues(cache, g, n);
        CHECK(fitted.coeffs == converted.coeffs);
        CHECK(fitted.g == g);
        CHECK(fitted.n == n);
    }
    CHECK_THROWS_AS(interpolate_P(0, 2, source), NotStable);
}
