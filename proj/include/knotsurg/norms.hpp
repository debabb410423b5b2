#pragma once

#include "knotsurg/algebra.hpp"
#include "knotsurg/laurent.hpp"

namespace knotsurg {

struct NormResult {
    long d = 1;
    Int value;
    LaurentPoly1 input;
};

/// |f|_d: absolute value of the product of f over the primitive d-th roots of
/// unity, computed as |Res(Phi_d, t^k f)| with t^k clearing negative
/// exponents. d = 1 gives the empty product, 1. Requires f != 0.
Int norm_d(const LaurentPoly1& f, long d);

NormResult norm_d_result(const LaurentPoly1& f, long d);

/// Norm of the t1 = t2 = t specialization of F. Returns 0 when the
/// specialization vanishes identically (the norm is then not defined as a
/// nonzero invariant).
Int diagonal_torsion_norm(const LaurentPoly2& F, long d);

/// Two-variable Alexander polynomial of the 2-bridge link D(1, -q, 1):
/// -q(t1 - 1)(t2 - 1) + t1 t2 + 1.
LaurentPoly2 fig8_link_alexander(long long q);

/// Torsion norm of the double cover of 2/q-surgery on the figure eight knot,
/// (5q^2 - 1)^2. Computed both from the closed form and through
/// diagonal_torsion_norm of the link polynomial; throws std::logic_error if
/// the two routes disagree.
Int fig8_torsion_norm(long long q);

}  // namespace knotsurg
