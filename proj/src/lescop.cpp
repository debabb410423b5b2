#include "knotsurg/lescop.hpp"

#include <stdexcept>

#include "knotsurg/dedekind.hpp"

namespace knotsurg {

DSequence::DSequence(std::vector<long long> e) : entries(std::move(e)) {
    if (entries.empty() || entries.size() % 2 == 0) {
        throw std::domain_error("DSequence: length must be odd (a1, b1, ..., a_n)");
    }
}

Rational LinkingMatrix::det() const { return d1 * d2 - Rational(l) * Rational(l); }

int LinkingMatrix::signature() const {
    const Rational d = det();
    const Rational t = trace();
    if (d.sign() > 0) {
        if (t.sign() > 0) return 2;
        if (t.sign() < 0) return -2;
        throw std::logic_error("LinkingMatrix: det > 0 forces tr != 0");
    }
    if (d.sign() < 0) return 0;
    throw std::domain_error("LinkingMatrix: singular matrix");
}

int LinkingMatrix::b_minus() const {
    const int s = signature();
    if (s == 2) return 0;
    if (s == -2) return 2;
    return 1;
}

long long linking_number(const DSequence& d) {
    long long sum = 0;
    for (int i = 0; i < d.n(); ++i) sum += d.a(i);
    return -sum;
}

Rational bracket_L(const DSequence& d, const LinkingMatrix& e) {
    if (linking_number(d) != e.l) {
        throw std::domain_error("bracket_L: linking number does not match the matrix");
    }
    const long long ell = e.l;
    Rational acc(0);
    for (int k = 0; k < d.n() - 1; ++k) {
        long long left = 0, right = 0;
        for (int i = 0; i <= k; ++i) left += d.a(i);
        for (int i = k + 1; i < d.n(); ++i) right += d.a(i);
        acc += Rational(d.b(k)) * Rational(left) * Rational(right);
    }
    acc -= Rational(ell * (ell * ell - 1), 12);
    acc += Rational(ell * ell, 12) * e.trace();
    return acc;
}

Rational bracket_K(long long p, long long q) {
    if (q <= 0) throw std::domain_error("bracket_K: q must be positive");
    return -Rational(Int(static_cast<long>(p)) * Int(static_cast<long>(p)) +
                         Int(static_cast<long>(q)) * Int(static_cast<long>(q)) + 1,
                     Int(24) * Int(static_cast<long>(q)) * Int(static_cast<long>(q)));
}

namespace {

long long to_ll(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw std::domain_error(std::string(what) + ": value out of range");
    return v.get_si();
}

}  // namespace

TwoBridgeLescop lescop_two_bridge_detail(const DSequence& d, const Rational& c1,
                                         const Rational& c2) {
    const long long q1 = to_ll(c1.den(), "surgery coefficient");
    const long long q2 = to_ll(c2.den(), "surgery coefficient");
    const long long p1 = to_ll(c1.num(), "surgery coefficient");
    const long long p2 = to_ll(c2.num(), "surgery coefficient");
    if (q1 <= 0 || q2 <= 0) throw std::domain_error("lescop_two_bridge: q1, q2 must be positive");

    LinkingMatrix e{c1, c2, linking_number(d)};
    if (e.det().is_zero()) {
        throw std::domain_error("lescop_two_bridge: singular linking matrix");
    }

    TwoBridgeLescop out;
    out.trace = e.trace();
    out.det = e.det();
    out.sigma = e.signature();
    out.b_minus = e.b_minus();
    out.bracket_l = bracket_L(d, e);
    out.bracket_k1 = bracket_K(p1, q1);
    out.bracket_k2 = bracket_K(p2, q2);
    // |p| = q1 q2 |det E| = |p1 p2 - l^2 q1 q2|, the order of H1.
    out.abs_p = abs(Int(static_cast<long>(p1)) * Int(static_cast<long>(p2)) -
                    Int(static_cast<long>(e.l)) * Int(static_cast<long>(e.l)) *
                        Int(static_cast<long>(q1)) * Int(static_cast<long>(q2)));
    out.s1 = dedekind_sum(p1, q1);
    out.s2 = dedekind_sum(p2, q2);

    const Rational main = Rational(out.b_minus % 2 == 0 ? 1 : -1) * Rational(q1) * Rational(q2) *
                          (c2 * out.bracket_k1 + c1 * out.bracket_k2 + out.bracket_l);
    const Rational defect =
        Rational(out.abs_p) *
        (Rational(out.sigma, 8) + out.s1 / Rational(2) + out.s2 / Rational(2));
    out.lambda = main + defect;
    return out;
}

Rational lescop_two_bridge(const DSequence& d, const Rational& c1, const Rational& c2) {
    return lescop_two_bridge_detail(d, c1, c2).lambda;
}

Rational lescop_seifert_X(const SeifertParams& params) {
    if (params.alpha < 1 || params.beta < 1) {
        throw std::domain_error("lescop_seifert_X: alpha, beta must be positive");
    }
    if (params.e_sign != 1 && params.e_sign != -1) {
        throw std::domain_error("lescop_seifert_X: e_sign must be +1 or -1");
    }
    const Rational S = dedekind_S(params);  // propagates gcd violations
    const long long a = params.alpha, b = params.beta;
    const Rational inner = Rational(-2 * a * b) + Rational(25 * b, 24 * a) +
                           Rational(25 * a, 24 * b) + Rational(1, 24 * a * b) - Rational(5, 8);
    if (params.e_sign > 0) return inner - Rational(5, 2) * S;
    return -(inner + Rational(5, 2) * S);
}

Int lescop_M_from_assumptions(long long q) { return Int(static_cast<long>(-q)); }

}  // namespace knotsurg
