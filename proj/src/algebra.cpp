#include "knotsurg/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace knotsurg {

LaurentPoly1 cyclotomic_poly(long d) {
    if (d < 1) throw std::domain_error("cyclotomic_poly: d must be >= 1");
    // Phi_e = (t^e - 1) / prod of Phi_f over proper divisors f of e,
    // built for every divisor e of d in ascending order.
    std::map<long, LaurentPoly1> phi;
    for (long e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        LaurentPoly1 num = LaurentPoly1::monomial(Int(1), e) - LaurentPoly1(Int(1));
        for (long f = 1; f < e; ++f) {
            if (e % f == 0) num = num.exact_div(phi.at(f));
        }
        phi[e] = num;
    }
    return phi.at(d);
}

namespace {

// Dense ordinary polynomial, ascending coefficients, no trailing zeros.
using DPoly = std::vector<Int>;

void strip(DPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const DPoly& p) { return static_cast<long>(p.size()) - 1; }

Int pow_int(const Int& b, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
DPoly prem(DPoly a, const DPoly& b) {
    const Int lb = b.back();
    long e = deg(a) - deg(b) + 1;
    while (!a.empty() && deg(a) >= deg(b)) {
        const Int la = a.back();
        const long sh = deg(a) - deg(b);
        DPoly next(a.size() - 1);
        for (long i = 0; i < deg(a); ++i) {
            Int v = lb * a[static_cast<std::size_t>(i)];
            if (i >= sh && i - sh < static_cast<long>(b.size()) - 1) {
                v -= la * b[static_cast<std::size_t>(i - sh)];
            }
            next[static_cast<std::size_t>(i)] = v;
        }
        strip(next);
        a = std::move(next);
        --e;
    }
    if (e > 0) {
        const Int scale = pow_int(lb, e);
        for (auto& c : a) c *= scale;
    }
    return a;
}

void exact_div_scalar(DPoly& p, const Int& s) {
    for (auto& c : p) {
        Int q = c / s;
        if (q * s != c) throw std::logic_error("subresultant: inexact content division");
        c = q;
    }
}

}  // namespace

Int resultant(const LaurentPoly1& f, const LaurentPoly1& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero polynomial");
    if (f.min_exp() < 0 || g.min_exp() < 0) {
        throw std::domain_error("resultant: ordinary polynomials required (no negative exponents)");
    }

    DPoly a(static_cast<std::size_t>(f.degree()) + 1), b(static_cast<std::size_t>(g.degree()) + 1);
    for (const auto& [e, c] : f.terms()) a[static_cast<std::size_t>(e)] = c;
    for (const auto& [e, c] : g.terms()) b[static_cast<std::size_t>(e)] = c;

    if (deg(a) == 0 && deg(b) == 0) return Int(1);
    int s = 1;
    if (deg(a) < deg(b)) {
        if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
        std::swap(a, b);
    }
    if (deg(b) == 0) return Int(s) * pow_int(b[0], deg(a));

    // Subresultant PRS; g_/h are the Brown-Traub correction factors.
    Int g_(1), h(1);
    while (true) {
        const long delta = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
        DPoly r = prem(a, b);
        if (r.empty()) return Int(0);  // common factor
        a = std::move(b);
        b = std::move(r);
        exact_div_scalar(b, g_ * pow_int(h, delta));
        g_ = a.back();
        if (delta > 0) {
            Int hnew = pow_int(g_, delta);
            if (delta > 1) {
                Int hden = pow_int(h, delta - 1);
                Int q = hnew / hden;
                if (q * hden != hnew) throw std::logic_error("subresultant: inexact h update");
                hnew = q;
            }
            h = hnew;
        }
        if (deg(b) == 0) break;
    }
    Int num = pow_int(b[0], deg(a));
    if (deg(a) > 1) {
        Int hden = pow_int(h, deg(a) - 1);
        Int q = num / hden;
        if (q * hden != num) throw std::logic_error("subresultant: inexact final division");
        num = q;
    }
    return Int(s) * num;
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::domain_error("IntMatrix: dimensions must be positive");
    e_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntMatrix(static_cast<int>(rows.size()),
                rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw std::domain_error("IntMatrix: ragged initializer");
        }
        int j = 0;
        for (long long v : row) at(i, j++) = Int(static_cast<long>(v));
        ++i;
    }
}

std::vector<Int> smith_normal_form(const IntMatrix& m) {
    const int r = m.rows(), c = m.cols();
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(r), std::vector<Int>(c));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    }
    const int k = std::min(r, c);
    std::vector<Int> diag;
    diag.reserve(static_cast<std::size_t>(k));

    auto swap_rows = [&](int i, int j) { std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]); };
    auto swap_cols = [&](int i, int j) {
        for (int t = 0; t < r; ++t) std::swap(a[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)], a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]);
    };

    for (int t = 0; t < k; ++t) {
        while (true) {
            // Full pivoting on the smallest nonzero entry of the trailing block.
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i) {
                for (int j = t; j < c; ++j) {
                    const Int& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (v == 0) continue;
                    if (pi < 0 || abs(v) < abs(a[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)])) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) {
                // trailing block is zero
                for (int z = t; z < k; ++z) diag.emplace_back(0);
                return diag;
            }
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            const Int p = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                Int& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (v == 0) continue;
                Int q = v / p;  // truncated; leaves |remainder| < |p|
                if (q != 0) {
                    for (int j = t; j < c; ++j) {
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= q * a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                    }
                }
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                Int& v = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (v == 0) continue;
                Int q = v / p;
                if (q != 0) {
                    for (int i = t; i < r; ++i) {
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= q * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                    }
                }
                if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0) clean = false;
            }
            if (!clean) continue;  // smaller entries appeared; re-pivot

            // Divisibility d_t | every remaining entry; fold offending rows in.
            bool divisible = true;
            for (int i = t + 1; i < r && divisible; ++i) {
                for (int j = t + 1; j < c && divisible; ++j) {
                    if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % p != 0) {
                        for (int jj = t; jj < c; ++jj) {
                            a[static_cast<std::size_t>(t)][static_cast<std::size_t>(jj)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
                        }
                        divisible = false;
                    }
                }
            }
            if (divisible) break;
        }
        diag.push_back(abs(a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]));
    }
    return diag;
}

}  // namespace knotsurg
