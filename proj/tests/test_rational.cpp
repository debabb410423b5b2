#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotsurg/rational.hpp"

using knotsurg::Int;
using knotsurg::Rational;

TEST_CASE("construction keeps lowest terms and positive denominator") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7).num() == 0);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(-10, -5) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and comparison") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("addition recomputed two ways agrees on 1000 random pairs") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    for (int i = 0; i < 1000; ++i) {
        const long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational direct = Rational(a, b) + Rational(c, d);
        // cross multiplication
        const Rational cross(Int((long)a) * Int((long)d) + Int((long)c) * Int((long)b),
                             Int((long)b) * Int((long)d));
        // lcm route
        const long long g = knotsurg::gcd_ll(b, d);
        const long long l = b / g * d;
        const Rational via_lcm(Int((long)(a * (l / b) + c * (l / d))), Int((long)l));
        CHECK(direct == cross);
        CHECK(direct == via_lcm);
    }
}

TEST_CASE("floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-4).floor() == -4);
    CHECK(Rational(0).floor() == 0);
}

TEST_CASE("string round trip") {
    CHECK(Rational(-9, 2).str() == "-9/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::from_string("-9/2") == Rational(-9, 2));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::from_string("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}
