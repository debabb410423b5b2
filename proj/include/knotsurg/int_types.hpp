#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotsurg {

/// Arbitrary-precision integer. All arithmetic in this library is exact;
/// no floating point is used anywhere.
using Int = mpz_class;

inline Int int_from_string(const std::string& s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
    return v;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int abs(const Int& a) { return a >= 0 ? a : Int(-a); }

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/// Integer square root of a perfect square; throws otherwise.
inline Int exact_sqrt(const Int& a) {
    if (!is_perfect_square(a)) throw std::domain_error("exact_sqrt: not a perfect square");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Mathematical residue in [0, m) for m > 0.
inline long long mod_floor(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace knotsurg
