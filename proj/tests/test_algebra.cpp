#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "knotsurg/algebra.hpp"
#include "knotsurg/rational.hpp"

using knotsurg::cyclotomic_poly;
using knotsurg::Int;
using knotsurg::IntMatrix;
using knotsurg::LaurentPoly1;
using knotsurg::Rational;
using knotsurg::resultant;
using knotsurg::smith_normal_form;

namespace {

LaurentPoly1 poly(std::initializer_list<long long> coeffs) {
    std::vector<Int> v;
    for (long long c : coeffs) v.emplace_back(static_cast<long>(c));
    return LaurentPoly1::from_coeff_list(v);
}

// Independent oracle: Sylvester matrix determinant by exact rational
// Gaussian elimination.
Rational sylvester_resultant(const LaurentPoly1& f, const LaurentPoly1& g) {
    const long m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rational(1);
    const long size = m + n;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size),
                                         std::vector<Rational>(static_cast<std::size_t>(size)));
    for (long r = 0; r < n; ++r) {
        for (long k = 0; k <= m; ++k) a[(std::size_t)r][(std::size_t)(r + k)] = Rational(f.coeff(m - k));
    }
    for (long r = 0; r < m; ++r) {
        for (long k = 0; k <= n; ++k) a[(std::size_t)(n + r)][(std::size_t)(r + k)] = Rational(g.coeff(n - k));
    }
    Rational det(1);
    for (long c = 0; c < size; ++c) {
        long pivot = -1;
        for (long r = c; r < size; ++r) {
            if (!a[(std::size_t)r][(std::size_t)c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            std::swap(a[(std::size_t)pivot], a[(std::size_t)c]);
            det = -det;
        }
        det *= a[(std::size_t)c][(std::size_t)c];
        for (long r = c + 1; r < size; ++r) {
            if (a[(std::size_t)r][(std::size_t)c].is_zero()) continue;
            const Rational factor = a[(std::size_t)r][(std::size_t)c] / a[(std::size_t)c][(std::size_t)c];
            for (long k = c; k < size; ++k) {
                a[(std::size_t)r][(std::size_t)k] -= factor * a[(std::size_t)c][(std::size_t)k];
            }
        }
    }
    return det;
}

LaurentPoly1 random_ordinary(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const int d = deg(rng);
    LaurentPoly1 p;
    for (int e = 0; e < d; ++e) p.set_coeff(e, Int(coeff(rng)));
    int lc = coeff(rng);
    if (lc == 0) lc = 1;
    p.set_coeff(d, Int(lc));
    return p;
}

// Exact integer determinant by cofactor expansion (test oracle, n <= 3).
Int cofactor_det(const IntMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    REQUIRE(n == 3);
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

}  // namespace

TEST_CASE("cyclotomic polynomials at small orders") {
    CHECK(cyclotomic_poly(1) == poly({-1, 1}));                // t - 1
    CHECK(cyclotomic_poly(2) == poly({1, 1}));                 // t + 1
    CHECK(cyclotomic_poly(5) == poly({1, 1, 1, 1, 1}));        // t^4 + ... + 1
    CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));             // t^2 - t + 1
    CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));      // t^4 - t^2 + 1
    CHECK_THROWS_AS(cyclotomic_poly(0), std::domain_error);
}

TEST_CASE("product of cyclotomics over divisors is t^d - 1, d <= 50") {
    for (long d = 1; d <= 50; ++d) {
        LaurentPoly1 prod((Int(1)));
        for (long e = 1; e <= d; ++e) {
            if (d % e == 0) prod *= cyclotomic_poly(e);
        }
        LaurentPoly1 expected = LaurentPoly1::monomial(Int(1), d) - LaurentPoly1(Int(1));
        CHECK(prod == expected);
    }
}

TEST_CASE("resultant anchors") {
    CHECK(resultant(poly({-1, 1}), poly({1, 1})) == 2);   // (t-1, t+1)
    CHECK(resultant(cyclotomic_poly(5), poly({-1, 1})) == 5);
    CHECK(resultant(cyclotomic_poly(5), poly({1, -3, 1})) == 121);
}

TEST_CASE("floating-point product over primitive 5th roots stays the oracle for 121") {
    // norm of t^2 - 3t + 1 at the four primitive 5th roots of unity
    std::complex<double> prod(1.0, 0.0);
    const double tau = 6.283185307179586;
    for (int i = 1; i <= 4; ++i) {
        const std::complex<double> z = std::polar(1.0, tau * i / 5.0);
        prod *= z * z - 3.0 * z + 1.0;
    }
    CHECK(std::abs(prod.real() - 121.0) < 1e-9);
    CHECK(std::abs(prod.imag()) < 1e-9);
}

TEST_CASE("resultant rejects zero and Laurent input") {
    CHECK_THROWS_AS(resultant(LaurentPoly1(), poly({1, 1})), std::domain_error);
    CHECK_THROWS_AS(resultant(poly({1, 1}), LaurentPoly1()), std::domain_error);
    CHECK_THROWS_AS(resultant(LaurentPoly1::monomial(Int(1), -1), poly({1, 1})),
                    std::domain_error);
}

TEST_CASE("resultant constant cases") {
    CHECK(resultant(poly({7}), poly({3})) == 1);
    CHECK(resultant(poly({7}), poly({1, 1, 1})) == 49);  // 7^deg(g)
    CHECK(resultant(poly({0, 0, 1}), poly({0, 1})) == 0);  // common root t = 0
}

TEST_CASE("resultant agrees with the Sylvester determinant on random inputs") {
    std::mt19937 rng(20240518);
    for (int i = 0; i < 150; ++i) {
        LaurentPoly1 f = random_ordinary(rng, 5);
        LaurentPoly1 g = random_ordinary(rng, 5);
        CHECK(Rational(resultant(f, g)) == sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant multiplicativity") {
    std::mt19937 rng(20240519);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly1 f = random_ordinary(rng, 3);
        LaurentPoly1 g = random_ordinary(rng, 3);
        LaurentPoly1 h = random_ordinary(rng, 3);
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    }
}

TEST_CASE("smith normal form anchors") {
    CHECK(smith_normal_form(IntMatrix{{-3, -2}, {-2, -3}}) == std::vector<Int>{Int(1), Int(5)});
    CHECK(smith_normal_form(IntMatrix{{1, 0}, {0, 1}}) == std::vector<Int>{Int(1), Int(1)});
    CHECK(smith_normal_form(IntMatrix{{10, 0}, {0, 1}}) == std::vector<Int>{Int(1), Int(10)});
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 0}}) == std::vector<Int>{Int(2), Int(0)});
    CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}) == std::vector<Int>{Int(0), Int(0)});
    // non-square
    CHECK(smith_normal_form(IntMatrix{{2, 4, 4}}) == std::vector<Int>{Int(2)});
}

TEST_CASE("smith normal form: invariant factor product equals |det|") {
    std::mt19937 rng(20240520);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int n = 2; n <= 3; ++n) {
        int produced = 0;
        while (produced < 100) {
            IntMatrix m(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) m.at(i, j) = Int(entry(rng));
            }
            const Int det = cofactor_det(m);
            if (det == 0) continue;
            ++produced;
            const auto d = smith_normal_form(m);
            Int prod(1);
            for (const auto& v : d) prod *= v;
            CHECK(prod == abs(det));
            for (std::size_t k = 0; k + 1 < d.size(); ++k) {
                REQUIRE(d[k] != 0);
                CHECK(d[k + 1] % d[k] == 0);
            }
        }
    }
}
