#include "knotsurg/norms.hpp"

#include <stdexcept>

namespace knotsurg {

Int norm_d(const LaurentPoly1& f, long d) {
    if (f.is_zero()) throw std::domain_error("norm_d: zero polynomial");
    if (d < 1) throw std::domain_error("norm_d: d must be >= 1");
    if (d == 1) return Int(1);  // empty index set
    return abs(resultant(cyclotomic_poly(d), f.normalized()));
}

NormResult norm_d_result(const LaurentPoly1& f, long d) {
    return NormResult{d, norm_d(f, d), f};
}

Int diagonal_torsion_norm(const LaurentPoly2& F, long d) {
    if (F.is_zero()) throw std::domain_error("diagonal_torsion_norm: zero polynomial");
    LaurentPoly1 diag = F.specialize_diagonal();
    if (diag.is_zero()) return Int(0);
    return norm_d(diag, d);
}

LaurentPoly2 fig8_link_alexander(long long q) {
    // -q(t1 - 1)(t2 - 1) + t1 t2 + 1 = (1-q) t1 t2 + q t1 + q t2 + (1-q)
    LaurentPoly2 p;
    const Int qi(static_cast<long>(q));
    p.set_coeff(1, 1, Int(1) - qi);
    p.set_coeff(1, 0, qi);
    p.set_coeff(0, 1, qi);
    p.set_coeff(0, 0, Int(1) - qi);
    return p;
}

Int fig8_torsion_norm(long long q) {
    const Int qi(static_cast<long>(q));
    const Int closed = (Int(5) * qi * qi - 1) * (Int(5) * qi * qi - 1);
    const Int via_torsion = diagonal_torsion_norm(fig8_link_alexander(q), 5);
    if (closed != via_torsion) {
        throw std::logic_error("fig8_torsion_norm: closed form and torsion route disagree");
    }
    return closed;
}

}  // namespace knotsurg
