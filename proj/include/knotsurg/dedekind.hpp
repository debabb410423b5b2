#pragma once

#include "knotsurg/rational.hpp"
#include "knotsurg/seifert.hpp"

namespace knotsurg {

/// Sawtooth ((x)): 0 at integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

/// Classical Dedekind sum s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)).
/// Requires p >= 1 and gcd(q, p) = 1.
Rational dedekind_sum(long long q, long long p);

/// s(1, p) = (p-1)(p-2) / (12p), the extremal value |s(q,p)| <= s(1,p).
Rational dedekind_s1(long long p);

/// S = s(q1, alpha) + s(q2, beta) + 2 s(q3, 5).
Rational dedekind_S(const SeifertParams& params);

}  // namespace knotsurg
