#pragma once

#include <optional>
#include <vector>

#include "knotsurg/algebra.hpp"
#include "knotsurg/rational.hpp"

namespace knotsurg {

/// Framed link presentation of the surgered manifold M: surgery coefficients
/// 2*alpha/q1, 2*beta/q2, 5/q3 on three fibers plus the 0-framed axis.
struct MPresentation {
    long long alpha = 1;
    long long beta = 1;
    long long q1 = 1;
    long long q2 = 1;
    long long q3 = 0;

    void validate() const;
};

/// Presentation of the double cover X: coefficients alpha/q1, beta/q2,
/// 5/q3, 5/q3. Carries the same five parameters as the M presentation.
struct XPresentation {
    long long alpha = 1;
    long long beta = 1;
    long long q1 = 1;
    long long q2 = 1;
    long long q3 = 0;

    void validate() const;
};

/// Euler number e = q1/alpha + q2/beta + 2*q3/5.
Rational euler_e(const XPresentation& x);

/// 5*beta*q1 + 5*alpha*q2 + 2*alpha*beta*q3 = 5*alpha*beta*e. The order of
/// H1(X) is 5 times its absolute value; H1(X) = Z/5 forces it to be +-1.
Int coefficient_equation(const XPresentation& x);

/// |H1(X)| = 25*alpha*beta*|e| when e != 0; nullopt means infinite (e = 0).
std::optional<Int> h1_order_X(const XPresentation& x);

/// |H1(M)| = |10 q1 + 10 q2 + 4 q3| in the alpha = beta = 1 case.
Int h1_order_M_alpha_beta_1(long long q1, long long q2, long long q3);

/// Double-cover lift: the framing halving keeps all five parameters.
/// Checks the homology consistency |coefficient_equation| = 1 => |H1(X)| = 5.
XPresentation lift_double_cover(const MPresentation& m);

/// Invariant factors of H1 presented by an integer relation matrix.
std::vector<Int> h1_group_from_linking(const IntMatrix& relation);

}  // namespace knotsurg
