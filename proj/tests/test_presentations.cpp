#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotsurg/presentations.hpp"

using knotsurg::coefficient_equation;
using knotsurg::euler_e;
using knotsurg::h1_group_from_linking;
using knotsurg::h1_order_M_alpha_beta_1;
using knotsurg::h1_order_X;
using knotsurg::Int;
using knotsurg::IntMatrix;
using knotsurg::lift_double_cover;
using knotsurg::MPresentation;
using knotsurg::Rational;
using knotsurg::XPresentation;

TEST_CASE("euler number") {
    CHECK(euler_e(XPresentation{1, 2, 1, -1, -1}) == Rational(1, 10));
    CHECK(euler_e(XPresentation{1, 1, 0, 0, 0}) == Rational(0));
    CHECK(euler_e(XPresentation{2, 3, 1, 1, -2}) == Rational(1, 30));
    // e = 1/(5 alpha beta) on the surviving class
    CHECK(euler_e(XPresentation{1, 2, 1, -1, -1}) == Rational(1, 5 * 1 * 2));
}

TEST_CASE("coefficient equation") {
    CHECK(coefficient_equation(XPresentation{1, 2, 1, -1, -1}) == 1);
    CHECK(coefficient_equation(XPresentation{1, 1, 0, 0, 0}) == 0);
    CHECK(coefficient_equation(XPresentation{1, 4, 1, 1, -3}) == 1);
    CHECK(coefficient_equation(XPresentation{1, 1, 1, 1, -4}) == 2);
}

TEST_CASE("h1 order of the double cover") {
    auto five = h1_order_X(XPresentation{1, 2, 1, -1, -1});
    REQUIRE(five.has_value());
    CHECK(*five == 5);
    CHECK_FALSE(h1_order_X(XPresentation{1, 1, 0, 0, 0}).has_value());  // infinite
    auto forty = h1_order_X(XPresentation{1, 4, 1, 1, 2});  // coefficient equation 41
    REQUIRE(forty.has_value());
    CHECK(*forty == 205);
    // a beta = 4 solution of the coefficient equation has order exactly 5
    auto beta4 = h1_order_X(XPresentation{1, 4, 1, 1, -3});
    REQUIRE(beta4.has_value());
    CHECK(*beta4 == 5);
}

TEST_CASE("h1 order of M at alpha = beta = 1") {
    CHECK(h1_order_M_alpha_beta_1(1, -1, 0) == 0);
    CHECK(h1_order_M_alpha_beta_1(1, -1, -1) == 4);
    CHECK(h1_order_M_alpha_beta_1(1, 1, -4) == 4);
}

TEST_CASE("order identity: h1_order_X = 5 |coefficient_equation|") {
    std::mt19937 rng(401);
    std::uniform_int_distribution<long long> ab(1, 6);
    std::uniform_int_distribution<long long> qd(-30, 30);
    int done = 0;
    while (done < 500) {
        XPresentation x{ab(rng), ab(rng), qd(rng), qd(rng), qd(rng)};
        ++done;
        const Int coeff = coefficient_equation(x);
        const auto order = h1_order_X(x);
        if (coeff == 0) {
            CHECK_FALSE(order.has_value());
        } else {
            REQUIRE(order.has_value());
            CHECK(*order == Int(5) * abs(coeff));
            CHECK((*order == 5) == (abs(coeff) == 1));
        }
    }
}

TEST_CASE("parity rule: 5q1 + 5q2 + 2q3 is even (never +-1) for odd q1, q2") {
    std::mt19937 rng(409);
    std::uniform_int_distribution<long long> qd(-5000, 5000);
    for (int i = 0; i < 10000; ++i) {
        const long long q1 = 2 * qd(rng) + 1, q2 = 2 * qd(rng) + 1, q3 = qd(rng);
        const long long v = 5 * q1 + 5 * q2 + 2 * q3;
        CHECK(v % 2 == 0);
        CHECK(v != 1);
        CHECK(v != -1);
    }
}

TEST_CASE("double-cover lift preserves all five parameters") {
    MPresentation m{1, 2, 1, -1, -1};
    XPresentation x = lift_double_cover(m);
    CHECK(x.alpha == m.alpha);
    CHECK(x.beta == m.beta);
    CHECK(x.q1 == m.q1);
    CHECK(x.q2 == m.q2);
    CHECK(x.q3 == m.q3);
    auto order = h1_order_X(x);
    REQUIRE(order.has_value());
    CHECK(*order == 5);

    // coefficient equation 2: lift still works, the caller sees the mismatch
    XPresentation y = lift_double_cover(MPresentation{1, 1, 1, 1, -4});
    CHECK(coefficient_equation(y) == 2);
    CHECK(*h1_order_X(y) == 10);
}

TEST_CASE("lift is injective on a presentation grid") {
    std::vector<XPresentation> seen;
    for (long long q1 : {-3, -1, 1, 3}) {
        for (long long q2 : {-3, -1, 1, 3}) {
            for (long long q3 : {-2, -1, 1, 2}) {
                MPresentation m{1, 2, q1, q2, q3};
                XPresentation x = lift_double_cover(m);
                for (const auto& other : seen) {
                    const bool same = other.alpha == x.alpha && other.beta == x.beta &&
                                      other.q1 == x.q1 && other.q2 == x.q2 && other.q3 == x.q3;
                    CHECK_FALSE(same);
                }
                seen.push_back(x);
            }
        }
    }
}

TEST_CASE("presentation invariants are enforced") {
    CHECK_THROWS_AS((MPresentation{1, 2, 2, 1, 1}.validate()), std::domain_error);  // q1 even
    CHECK_THROWS_AS((MPresentation{2, 4, 1, 1, 1}.validate()), std::domain_error);  // gcd(alpha,beta)
    CHECK_THROWS_AS((MPresentation{3, 2, 3, 1, 1}.validate()), std::domain_error);  // gcd(q1, 2a)
    CHECK_THROWS_AS((MPresentation{1, 2, 1, 1, 5}.validate()), std::domain_error);  // gcd(q3, 5)
    CHECK_THROWS_AS((MPresentation{0, 1, 1, 1, 1}.validate()), std::domain_error);  // alpha < 1
    CHECK_THROWS_AS(lift_double_cover(MPresentation{1, 2, 2, 1, 1}), std::domain_error);
    MPresentation{1, 2, 1, -1, -1}.validate();  // fine
}

TEST_CASE("h1 from a relation matrix") {
    CHECK(h1_group_from_linking(IntMatrix{{-3, -2}, {-2, -3}}) ==
          std::vector<Int>{Int(1), Int(5)});
    CHECK(h1_group_from_linking(IntMatrix{{1, 0}, {0, 1}}) == std::vector<Int>{Int(1), Int(1)});
    CHECK(h1_group_from_linking(IntMatrix{{2, 0}, {0, 0}}) == std::vector<Int>{Int(2), Int(0)});
}
