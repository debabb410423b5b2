#include "knotsurg/seifert.hpp"

#include <stdexcept>

#include "knotsurg/int_types.hpp"

namespace knotsurg {

void SeifertParams::validate() const {
    if (alpha < 1 || beta < 1) throw std::domain_error("SeifertParams: alpha, beta must be positive");
    if (gcd_ll(alpha, beta) != 1) throw std::domain_error("SeifertParams: gcd(alpha, beta) != 1");
    if (mod_floor(q1, 2) != 1 || mod_floor(q2, 2) != 1) {
        throw std::domain_error("SeifertParams: q1 and q2 must be odd");
    }
    if (gcd_ll(q1, alpha) != 1) throw std::domain_error("SeifertParams: gcd(q1, alpha) != 1");
    if (gcd_ll(q2, beta) != 1) throw std::domain_error("SeifertParams: gcd(q2, beta) != 1");
    if (gcd_ll(q3, 5) != 1) throw std::domain_error("SeifertParams: gcd(q3, 5) != 1");
    if (e_sign != 1 && e_sign != -1) throw std::domain_error("SeifertParams: e_sign must be +1 or -1");
}

}  // namespace knotsurg
