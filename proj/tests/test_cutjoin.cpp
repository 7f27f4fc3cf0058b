#include <doctest.h>

#include "mhn/cutjoin.hpp"
#include "mhn/perm_oracle.hpp"

using namespace mhn;

TEST_CASE("disc and cylinder amplitudes") {
    CHECK(h01(1) == 1);
    CHECK(h01(2) == Rational(1, 2));
    CHECK(h01(3) == Rational(2, 3));
    CHECK(h01(4) == Rational(5, 4));
    CHECK(h01(5) == Rational(14, 5));
    CHECK(h02(1, 1) == 1);
    CHECK(h02(2, 1) == 2);
    CHECK(h02(2, 2) == Rational(9, 2));
    CHECK(h02(3, 1) == 5);
    CHECK(h02(3, 2) == 12);
    CHECK_THROWS_AS(h01(0), Error);
    CHECK_THROWS_AS(h02(1, 0), Error);
}

TEST_CASE("recursion reproduces the frozen small values") {
    CHECK(cutjoin_hurwitz(0, {1, 1, 1}) == 8);
    CHECK(cutjoin_hurwitz(1, {1}) == 0);
    CHECK(cutjoin_hurwitz(1, {2}) == Rational(1, 2));
    CHECK(cutjoin_hurwitz(1, {3}) == Rational(10, 3));
    CHECK(cutjoin_hurwitz(1, {1, 1}) == 1);
    CHECK(cutjoin_hurwitz(1, {2, 1}) == 10);
    CHECK(cutjoin_hurwitz(2, {1}) == 0);
    CHECK(cutjoin_hurwitz(2, {2}) == Rational(1, 2));
    // unstable inputs fall through to the closed amplitudes
    CHECK(cutjoin_hurwitz(0, {4}) == Rational(5, 4));
    CHECK(cutjoin_hurwitz(0, {3, 2}) == 12);
}

TEST_CASE("the closed amplitudes satisfy the recursion themselves") {
    HurwitzTable table;
    for (unsigned m = 2; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(cutjoin_rhs_over_head(0, {m}, 0, table) == h01(m));
    }
    for (unsigned a = 1; a <= 4; ++a)
        for (unsigned b = 1; b <= a; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            if (a >= 2) CHECK(cutjoin_rhs_over_head(0, {a, b}, 0, table) == h02(a, b));
            if (b >= 2) CHECK(cutjoin_rhs_over_head(0, {a, b}, 1, table) == h02(a, b));
        }
}

TEST_CASE("the recursion is independent of the distinguished part") {
    HurwitzTable table;
    const std::pair<unsigned, Partition> cases[] = {
        {0, {3, 2, 1}}, {1, {2, 2}}, {1, {3, 1}}, {2, {2, 1}}, {0, {4, 2, 1}},
        {1, {3, 2, 2}},
    };
    for (const auto& [g, mu] : cases) {
        Rational first = cutjoin_rhs_over_head(g, mu, 0, table);
        for (size_t h = 1; h < mu.size(); ++h) {
            CAPTURE(g);
            CAPTURE(partition_to_string(mu));
            CAPTURE(h);
            CHECK(cutjoin_rhs_over_head(g, mu, h, table) == first);
        }
        CHECK(table.get(g, mu) == first);
    }
}

TEST_CASE("recursion agrees with the enumeration oracle on a small sweep") {
    HurwitzTable table;
    for (unsigned d = 1; d <= 4; ++d)
        for (unsigned m = 0; m <= 6; ++m)
            for (const auto& [key, value] : oracle_hurwitz_sweep(d, m)) {
                CAPTURE(d);
                CAPTURE(m);
                CAPTURE(partition_to_string(key.second));
                CHECK(table.get(key.first, key.second) == value);
            }
}
