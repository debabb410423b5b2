#pragma once

namespace knotsurg {

/// Parameters of the three-singular-fiber Seifert candidate presentations:
/// multiplicities {2*alpha, 2*beta, 5} downstairs, {alpha, beta, 5, 5} on the
/// double cover, with framing numerators q1, q2, q3 and the sign of the
/// Euler number e.
struct SeifertParams {
    long long alpha = 1;
    long long beta = 1;
    long long q1 = 1;
    long long q2 = 1;
    long long q3 = 0;
    int e_sign = +1;

    /// Enforces the presentation invariants: alpha, beta >= 1 coprime,
    /// q1 and q2 odd, gcd(q1, alpha) = gcd(q2, beta) = gcd(q3, 5) = 1,
    /// e_sign in {+1, -1}. Throws std::domain_error.
    void validate() const;
};

}  // namespace knotsurg
