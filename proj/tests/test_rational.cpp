#include <doctest.h>

#include "mhn/rational.hpp"

using namespace mhn;

TEST_CASE("rational strings are canonical") {
    CHECK(to_string(Rational(2, 3)) == "2/3");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(0)) == "0");
    // denominator 1 prints as a bare integer, never "n/1"
    CHECK(to_string(make_rational(5, 1)) == "5");
}

TEST_CASE("rational parsing accepts both integer and fraction forms") {
    CHECK(rational_from_string("7/21") == Rational(1, 3));
    CHECK(rational_from_string("1/1") == Rational(1));
    CHECK(rational_from_string("-3") == Rational(-3));
    CHECK(rational_from_string("0") == Rational(0));
    CHECK_THROWS_AS(rational_from_string("1/0"), DivisionByZero);
    CHECK_THROWS_AS(rational_from_string("abc"), Error);
    CHECK_THROWS_AS(rational_from_string(""), Error);
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(central_binomial(0) == 1);
    CHECK(central_binomial(1) == 2);
    CHECK(central_binomial(3) == 20);
    CHECK(central_binomial(5) == 252);
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(1) == 3);
    CHECK(double_factorial_odd(2) == 15);
    CHECK(double_factorial_odd(4) == 945);
}

TEST_CASE("rational powers") {
    CHECK(pow_rational(Rational(-1, 2), 3) == Rational(-1, 8));
    CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_rational(Rational(7), 0) == 1);
    CHECK_THROWS_AS(pow_rational(Rational(0), -1), DivisionByZero);
    CHECK(pow_integer(Integer(3), 4) == 81);
}
