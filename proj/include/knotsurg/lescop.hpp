#pragma once

#include <vector>

#include "knotsurg/rational.hpp"
#include "knotsurg/seifert.hpp"

namespace knotsurg {

/// 2-bridge link description D(a1, b1, a2, ..., b_{n-1}, a_n):
/// an odd-length integer sequence; a frame box c means |c| full twists.
struct DSequence {
    std::vector<long long> entries;

    DSequence() = default;
    explicit DSequence(std::vector<long long> e);

    int n() const { return static_cast<int>((entries.size() + 1) / 2); }
    long long a(int i) const { return entries[static_cast<std::size_t>(2 * i)]; }      // 0-based
    long long b(int i) const { return entries[static_cast<std::size_t>(2 * i + 1)]; }  // 0-based
};

/// Linking matrix E = [[p1/q1, l], [l, p2/q2]] of a two-component surgery
/// presentation. Signature and negative-eigenvalue count come from exact
/// sign analysis of (det, tr); det = 0 is rejected.
struct LinkingMatrix {
    Rational d1, d2;  // diagonal surgery coefficients
    long long l = 0;  // linking number

    Rational trace() const { return d1 + d2; }
    Rational det() const;
    int signature() const;
    int b_minus() const;
};

/// l = -(a1 + ... + an).
long long linking_number(const DSequence& d);

/// [L] = sum_k b_k (a1+...+ak)(a_{k+1}+...+a_n) - l(l^2-1)/12 + l^2 tr(E)/12.
/// The matrix's linking number must match linking_number(d).
Rational bracket_L(const DSequence& d, const LinkingMatrix& e);

/// [K_i] = -(p^2 + q^2 + 1) / (24 q^2), q > 0.
Rational bracket_K(long long p, long long q);

struct TwoBridgeLescop {
    Rational lambda;
    Rational bracket_l;
    Rational bracket_k1, bracket_k2;
    Rational trace, det;
    int sigma = 0;
    int b_minus = 0;
    Int abs_p;        // q1 q2 |det E|, the order of H1
    Rational s1, s2;  // Dedekind sums of the surgery coefficients
};

/// Casson-Walker-Lescop invariant of surgery on the 2-bridge link d with
/// coefficients c1 = p1/q1, c2 = p2/q2 (in lowest terms, q_i > 0 after
/// canonicalization, det(E) != 0).
///
/// Orientation and sign conventions are pinned by the twist-family anchors
/// (lambda = -q for D(1, -q, 1) with -3, -3 surgery); the global sign flip
/// under orientation reversal has no anchor here and is not normalized
/// beyond that.
TwoBridgeLescop lescop_two_bridge_detail(const DSequence& d, const Rational& c1,
                                         const Rational& c2);
Rational lescop_two_bridge(const DSequence& d, const Rational& c1, const Rational& c2);

/// Lescop invariant of the double-cover Seifert candidate:
///   e_sign=+1: -2ab + 25b/(24a) + 25a/(24b) + 1/(24ab) - 5/8 - (5/2) S
///   e_sign=-1: the negation of the same expression with +(5/2) S,
/// where S = dedekind_S(params). Only positivity/gcd preconditions are
/// enforced here; the parity invariants live in SeifertParams::validate().
Rational lescop_seifert_X(const SeifertParams& params);

/// Contract value lambda(M) = -q for 2/q-surgery under the standing
/// assumptions (trivial ambient Lescop invariant, fixed Alexander
/// polynomial class). Recorded, not derived from a surgery formula.
Int lescop_M_from_assumptions(long long q);

}  // namespace knotsurg
