#include <doctest.h>

#include "mhn/perm_oracle.hpp"

using namespace mhn;

TEST_CASE("partition helpers") {
    CHECK(canonical_partition({1, 3, 0, 2}) == Partition{3, 2, 1});
    CHECK(partition_weight({3, 2, 1}) == 6);
    CHECK(multiplicity_factorial({2, 1}) == 1);
    CHECK(multiplicity_factorial({1, 1, 1}) == 6);
    CHECK(multiplicity_factorial({2, 2, 1, 1, 1}) == 12);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0) == std::vector<Partition>{{}});
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partition_from_string("1,3,2") == Partition{3, 2, 1});
    CHECK(partition_to_string({3, 2, 1}) == "(3,2,1)");
    CHECK_THROWS_AS(partition_from_string("1,0,2"), Error);
    CHECK_THROWS_AS(partition_from_string(""), Error);
    CHECK_THROWS_AS(partition_from_string("2,x"), Error);
}

TEST_CASE("transposition sequence census in S_3") {
    // 3 transpositions, length-3 sequences: 27 in total
    CHECK(count_factorisations(3, 3, false, false).total == 27);
    // non-transitive = all three transpositions equal: 27 - 3
    CHECK(count_factorisations(3, 3, false, true).total == 24);
    // monotone: larger entries weakly increasing
    CHECK(count_factorisations(3, 3, true, false).total == 15);
    // monotone + transitive + product a transposition
    auto mt = count_factorisations(3, 3, true, true);
    CHECK(mt.by_type.at({2, 1}) == 12);
}

TEST_CASE("monotone sequence counts match the closed recurrence") {
    for (unsigned d = 1; d <= 5; ++d)
        for (unsigned m = 0; m <= 5; ++m) {
            CAPTURE(d);
            CAPTURE(m);
            CHECK(count_factorisations(d, m, true, false).total ==
                  monotone_sequence_count(d, m));
        }
    CHECK(monotone_sequence_count(3, 3) == 15);
    CHECK(monotone_sequence_count(4, 4) == 301);
}

TEST_CASE("hurwitz numbers from the enumeration definition") {
    // unramified-ish base cases
    CHECK(oracle_hurwitz(0, {1}) == 1);
    CHECK(oracle_hurwitz(0, {2}) == Rational(1, 2));
    CHECK(oracle_hurwitz(0, {3}) == Rational(2, 3));
    CHECK(oracle_hurwitz(0, {4}) == Rational(5, 4));
    CHECK(oracle_hurwitz(0, {1, 1}) == 1);
    CHECK(oracle_hurwitz(0, {2, 1}) == 2);
    CHECK(oracle_hurwitz(0, {2, 2}) == Rational(9, 2));
    CHECK(oracle_hurwitz(0, {3, 1}) == 5);
    CHECK(oracle_hurwitz(0, {1, 1, 1}) == 8);
    // higher genus
    CHECK(oracle_hurwitz(1, {1}) == 0);
    CHECK(oracle_hurwitz(1, {2}) == Rational(1, 2));
    CHECK(oracle_hurwitz(1, {3}) == Rational(10, 3));
    CHECK(oracle_hurwitz(1, {1, 1}) == 1);
    CHECK(oracle_hurwitz(1, {2, 1}) == 10);
    CHECK(oracle_hurwitz(2, {1}) == 0);
    CHECK(oracle_hurwitz(2, {2}) == Rational(1, 2));
}

TEST_CASE("sweeping one enumeration settles every compatible profile") {
    auto s33 = oracle_hurwitz_sweep(3, 3);
    CHECK(s33.size() == 1);
    CHECK(s33.at({0u, Partition{2, 1}}) == 2);

    auto s44 = oracle_hurwitz_sweep(4, 4);
    CHECK(s44.size() == 2);
    CHECK(s44.at({0u, Partition{2, 2}}) == Rational(9, 2));
    CHECK(s44.at({0u, Partition{3, 1}}) == 5);

    // sweep values agree with the one-profile entry point
    for (const auto& [key, value] : oracle_hurwitz_sweep(4, 6)) {
        CAPTURE(partition_to_string(key.second));
        CHECK(value == oracle_hurwitz(key.first, key.second));
    }
}
