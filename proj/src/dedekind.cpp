#include "knotsurg/dedekind.hpp"

#include <stdexcept>

namespace knotsurg {

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_sum(long long q, long long p) {
    if (p <= 0) throw std::domain_error("dedekind_sum: p must be positive");
    if (gcd_ll(q, p) != 1) throw std::domain_error("dedekind_sum: gcd(q, p) must be 1");
    if (p == 1) return Rational(0);
    // ((k/p)) = (2k-p)/(2p) for 0 < k < p, so each term is
    // (2k-p)(2r-p)/(4p^2) with r = kq mod p, skipping r = 0 (cannot occur
    // for coprime q). Accumulate the integer numerator only.
    const long long qr = mod_floor(q, p);
    Int total(0);
    long long r = 0;
    for (long long k = 1; k < p; ++k) {
        r += qr;
        if (r >= p) r -= p;
        total += Int(static_cast<long>(2 * k - p)) * Int(static_cast<long>(2 * r - p));
    }
    return Rational(total, Int(4) * Int(static_cast<long>(p)) * Int(static_cast<long>(p)));
}

Rational dedekind_s1(long long p) {
    if (p <= 0) throw std::domain_error("dedekind_s1: p must be positive");
    return Rational(Int(static_cast<long>(p - 1)) * Int(static_cast<long>(p - 2)),
                    Int(12) * Int(static_cast<long>(p)));
}

Rational dedekind_S(const SeifertParams& params) {
    return dedekind_sum(params.q1, params.alpha) + dedekind_sum(params.q2, params.beta) +
           Rational(2) * dedekind_sum(params.q3, 5);
}

}  // namespace knotsurg
