#include "mhn/wave.hpp"

#include "doctest.h"
#include "mhn/cutjoin.hpp"
#include "mhn/errors.hpp"
#include "mhn/perm_oracle.hpp"

using namespace mhn;

TEST_CASE("monotone sequence counts satisfy the boundary rows") {
    CHECK(f_count(0, 0) == 1);
    CHECK(f_count(0, 3) == 0);
    for (unsigned d = 1; d <= 6; ++d) CHECK(f_count(d, 0) == 1);
    for (unsigned m = 1; m <= 8; ++m) {
        CHECK(f_count(1, m) == 0);
        CHECK(f_count(2, m) == 1);
    }
    CHECK(f_count(3, 3) == 15);
    CHECK(f_count(4, 4) == 301);
}

TEST_CASE("monotone sequence counts match direct enumeration") {
    for (unsigned d = 1; d <= 5; ++d)
        for (unsigned m = 0; m <= 6; ++m) {
            CAPTURE(d);
            CAPTURE(m);
            OracleCounts counts = count_factorisations(d, m, true, false);
            CHECK(counts.total == f_count(d, m));
        }
}

TEST_CASE("stirling table boundary values and the counting identity") {
    StirlingTable s;
    CHECK(s.get(0, 0) == 1);
    CHECK(s.get(3, 0) == 0);
    CHECK(s.get(4, 2) == 7);
    CHECK(s.get(5, 2) == 15);
    CHECK(s.get(7, 3) == 301);
    CHECK(s.get(2, 5) == 0);
    CHECK_NOTHROW(stirling_identity_check(8, 8));
}

TEST_CASE("directly assembled wave function has the expected cells") {
    BivariateSeries z = wave_function_direct(6, 6);
    CHECK(z.at(0, 0) == 1);
    CHECK(z.at(0, 3) == 0);
    CHECK(z.at(1, 0) == 1);
    CHECK(z.at(2, 1) == make_rational(1, 2));
    CHECK(z.at(3, 3) == make_rational(5, 2));
    CHECK(z.at(-1, 0) == 0);
    CHECK(z.at(0, -1) == 0);
    CHECK_THROWS_AS(z.at(7, 0), InvalidWindow);
}

TEST_CASE("wave function annihilated by the quantised curve") {
    BivariateSeries z = wave_function_direct(8, 8);
    BivariateSeries r = quantum_curve_residual(z);
    CHECK(r.D == 7);
    CHECK(r.M == 8);
    for (unsigned d = 0; d <= r.D; ++d)
        for (unsigned m = 0; m <= r.M; ++m) {
            CAPTURE(d);
            CAPTURE(m);
            CHECK(r.c[d][m] == 0);
        }
}

TEST_CASE("free-energy exponential rebuilds the same wave function") {
    HurwitzTable table;
    auto source = [&table](unsigned g, const Partition& mu) {
        return table.get(g, mu);
    };
    BivariateSeries direct = wave_function_direct(6, 6);
    BivariateSeries assembled = wave_function_from_free_energies(6, 6, source);
    for (unsigned d = 0; d <= 6; ++d)
        for (unsigned m = 0; m <= 6; ++m) {
            CAPTURE(d);
            CAPTURE(m);
            CHECK(assembled.c[d][m] == direct.c[d][m]);
        }
}

TEST_CASE("constant series fails the quantised curve") {
    BivariateSeries one(4, 4);
    one.c[0][0] = 1;
    BivariateSeries r = quantum_curve_residual(one);
    CHECK(r.c[0][0] == 1);
}

TEST_CASE("a single perturbed cell surfaces at the predicted residual cells") {
    BivariateSeries z = wave_function_direct(6, 6);
    z.c[2][1] += 1;
    BivariateSeries r = quantum_curve_residual(z);
    for (unsigned d = 0; d <= r.D; ++d)
        for (unsigned m = 0; m <= r.M; ++m) {
            CAPTURE(d);
            CAPTURE(m);
            if (d == 1 && m == 1)
                CHECK(r.c[d][m] == -2);
            else if (d == 1 && m == 2)
                CHECK(r.c[d][m] == 2);
            else if (d == 2 && m == 1)
                CHECK(r.c[d][m] == 1);
            else
                CHECK(r.c[d][m] == 0);
        }
}
