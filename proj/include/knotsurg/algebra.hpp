#pragma once

#include <vector>

#include "knotsurg/int_types.hpp"
#include "knotsurg/laurent.hpp"

namespace knotsurg {

/// d-th cyclotomic polynomial: monic, integer coefficients, degree phi(d).
LaurentPoly1 cyclotomic_poly(long d);

/// Resultant of two nonzero ordinary polynomials (no negative exponents),
/// Res(f, g) = lc(f)^deg(g) * prod g(root of f), computed exactly by
/// fraction-free subresultant elimination.
Int resultant(const LaurentPoly1& f, const LaurentPoly1& g);

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

/// Invariant factors d1 | d2 | ... of the Smith normal form, all >= 0,
/// length min(rows, cols); a 0 entry means a free factor of the cokernel.
std::vector<Int> smith_normal_form(const IntMatrix& m);

}  // namespace knotsurg
