#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "knotsurg/dedekind.hpp"
#include "knotsurg/int_types.hpp"
#include "knotsurg/lescop.hpp"
#include "knotsurg/norms.hpp"

using knotsurg::bracket_K;
using knotsurg::bracket_L;
using knotsurg::dedekind_S;
using knotsurg::DSequence;
using knotsurg::Int;
using knotsurg::lescop_M_from_assumptions;
using knotsurg::lescop_seifert_X;
using knotsurg::lescop_two_bridge;
using knotsurg::lescop_two_bridge_detail;
using knotsurg::LinkingMatrix;
using knotsurg::linking_number;
using knotsurg::Rational;
using knotsurg::SeifertParams;

TEST_CASE("linking numbers") {
    CHECK(linking_number(DSequence({1, -7, 1})) == -2);
    CHECK(linking_number(DSequence({0})) == 0);
    CHECK(linking_number(DSequence({2, 5, -3})) == 1);
    CHECK_THROWS_AS(DSequence({1, 2}), std::domain_error);
    CHECK_THROWS_AS(DSequence(std::vector<long long>{}), std::domain_error);
}

TEST_CASE("bracket_L anchors") {
    for (long long q = -6; q <= 6; ++q) {
        DSequence d({1, -q, 1});
        LinkingMatrix e{Rational(-3), Rational(-3), linking_number(d)};
        CHECK(e.trace() == Rational(-6));
        CHECK(bracket_L(d, e) == Rational(-q) - Rational(3, 2));
    }
    // n = 1, l = 0: every term vanishes
    DSequence single({0});
    LinkingMatrix e0{Rational(-3), Rational(5), 0};
    CHECK(bracket_L(single, e0) == Rational(0));
    // mismatched linking number is rejected
    DSequence d({1, -2, 1});
    LinkingMatrix bad{Rational(-3), Rational(-3), 7};
    CHECK_THROWS_AS(bracket_L(d, bad), std::domain_error);
}

TEST_CASE("bracket_K anchors") {
    CHECK(bracket_K(-3, 1) == Rational(-11, 24));
    CHECK(bracket_K(0, 1) == Rational(-1, 12));
    CHECK(bracket_K(5, 2) == Rational(-5, 16));
    CHECK_THROWS_AS(bracket_K(1, 0), std::domain_error);
    CHECK_THROWS_AS(bracket_K(1, -2), std::domain_error);
}

TEST_CASE("two-bridge surgery gives lambda = -q for q in [-50, 50]") {
    for (long long q = -50; q <= 50; ++q) {
        const auto v = lescop_two_bridge_detail(DSequence({1, -q, 1}), Rational(-3), Rational(-3));
        CHECK(v.lambda == Rational(-q));
        CHECK(v.trace == Rational(-6));
        CHECK(v.b_minus == 2);
        CHECK(v.sigma == -2);
        CHECK(v.bracket_l == Rational(-q) - Rational(3, 2));
        CHECK(v.bracket_k1 == Rational(-11, 24));
        CHECK(v.bracket_k2 == Rational(-11, 24));
        CHECK(v.abs_p == 5);
    }
}

TEST_CASE("two-bridge surgery rejects singular matrices") {
    // 2/1 and 2/1 with linking number 2: det = 4 - 4 = 0
    CHECK_THROWS_AS(lescop_two_bridge(DSequence({-1, 3, -1}), Rational(2), Rational(2)),
                    std::domain_error);
}

TEST_CASE("linking matrix sign analysis matches a floating eigenvalue oracle") {
    std::mt19937 rng(307);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    int done = 0;
    while (done < 300) {
        LinkingMatrix e{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), num(rng)};
        if (e.det().is_zero()) continue;
        const double tr = static_cast<double>(e.trace().num().get_d()) / e.trace().den().get_d();
        const double det = static_cast<double>(e.det().num().get_d()) / e.det().den().get_d();
        const double disc = std::sqrt(tr * tr - 4.0 * det);
        const double l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
        if (std::abs(l1) < 1e-9 || std::abs(l2) < 1e-9) continue;
        ++done;
        const int neg = (l1 < 0 ? 1 : 0) + (l2 < 0 ? 1 : 0);
        const int pos = 2 - neg;
        CHECK(e.b_minus() == neg);
        CHECK(e.signature() == pos - neg);
        // determinant sign pattern
        CHECK((e.det().sign() > 0) == (neg % 2 == 0));
    }
}

TEST_CASE("Seifert candidate lambda anchors") {
    CHECK(lescop_seifert_X(SeifertParams{1, 4, 1, 1, 2, +1}) == Rational(-9, 2));
    CHECK(lescop_seifert_X(SeifertParams{1, 2, 1, -1, -1, +1}) == Rational(-1));
    CHECK(lescop_seifert_X(SeifertParams{2, 3, 1, 1, -2, +1}) == Rational(-21, 2));
    // gcd violations propagate; parity is not this function's business
    CHECK_THROWS_AS(lescop_seifert_X(SeifertParams{3, 4, 3, 1, 1, +1}), std::domain_error);
    CHECK_THROWS_AS(lescop_seifert_X(SeifertParams{1, 2, 1, 1, 5, +1}), std::domain_error);
    CHECK(lescop_seifert_X(SeifertParams{1, 4, 2, -3, -3, +1}) == Rational(-9, 2));
    CHECK_THROWS_AS(lescop_seifert_X(SeifertParams{0, 2, 1, 1, 1, +1}), std::domain_error);
    CHECK_THROWS_AS(lescop_seifert_X(SeifertParams{1, 2, 1, 1, 1, 0}), std::domain_error);
}

TEST_CASE("mirror relation: e<0 value is the negation with S replaced by -S") {
    std::mt19937 rng(311);
    std::uniform_int_distribution<long long> small(1, 6);
    std::uniform_int_distribution<long long> qd(-30, 30);
    int done = 0;
    while (done < 200) {
        SeifertParams p;
        p.alpha = small(rng);
        p.beta = small(rng);
        p.q1 = qd(rng);
        p.q2 = qd(rng);
        p.q3 = qd(rng);
        if (knotsurg::gcd_ll(p.q1, p.alpha) != 1 || knotsurg::gcd_ll(p.q2, p.beta) != 1 ||
            knotsurg::gcd_ll(p.q3, 5) != 1) {
            continue;
        }
        ++done;
        SeifertParams mirrored = p;
        mirrored.e_sign = -1;
        SeifertParams flipped = p;  // same residues, S negated by hand below
        flipped.q1 = -p.q1;
        flipped.q2 = -p.q2;
        flipped.q3 = -p.q3;
        // s is odd, so S(flipped) = -S(p)
        CHECK(dedekind_S(flipped) == -dedekind_S(p));
        CHECK(lescop_seifert_X(mirrored) == -lescop_seifert_X(flipped));
    }
}

TEST_CASE("figure-eight norm identity: sqrt(norm) = 5 lambda^2 - 1") {
    for (long long q = -50; q <= 50; ++q) {
        if (q == 0) continue;
        const Rational lambda =
            lescop_two_bridge(DSequence({1, -q, 1}), Rational(-3), Rational(-3));
        const Int norm = knotsurg::fig8_torsion_norm(q);
        const Rational sqrt_norm(knotsurg::exact_sqrt(norm));
        CHECK(sqrt_norm == Rational(5) * lambda * lambda - Rational(1));
        CHECK(sqrt_norm >= Rational(4) * lambda * lambda - Rational(1));
    }
}

TEST_CASE("lambda(M) contract") {
    CHECK(lescop_M_from_assumptions(1) == -1);
    CHECK(lescop_M_from_assumptions(0) == 0);
    CHECK(lescop_M_from_assumptions(-5) == 5);
}
