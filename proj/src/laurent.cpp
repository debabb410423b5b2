#include "knotsurg/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace knotsurg {

namespace {

Rational pow_rational(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1), base = x;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (neg) return Rational(1) / acc;
    return acc;
}

}  // namespace

LaurentPoly1::LaurentPoly1(const Int& c, const std::string& var) : var_(var) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly1 LaurentPoly1::monomial(const Int& c, long exp, const std::string& var) {
    LaurentPoly1 p;
    p.var_ = var;
    if (c != 0) p.terms_[exp] = c;
    return p;
}

LaurentPoly1 LaurentPoly1::from_coeff_list(const std::vector<Int>& coeffs, long offset,
                                           const std::string& var) {
    LaurentPoly1 p;
    p.var_ = var;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) p.terms_[offset + static_cast<long>(i)] = coeffs[i];
    }
    return p;
}

Int LaurentPoly1::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly1::set_coeff(long exp, const Int& c) {
    if (c == 0) {
        terms_.erase(exp);
    } else {
        terms_[exp] = c;
    }
}

long LaurentPoly1::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly1::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly1::leading_coeff() const { return terms_.at(max_exp()); }

LaurentPoly1 LaurentPoly1::operator-() const {
    LaurentPoly1 r;
    r.var_ = var_;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
    for (const auto& [e, c] : o.terms_) {
        Int s = coeff(e) + c;
        set_coeff(e, s);
    }
    return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
    for (const auto& [e, c] : o.terms_) {
        Int s = coeff(e) - c;
        set_coeff(e, s);
    }
    return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1 r;
    r.var_ = a.var_;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Int s = r.coeff(ea + eb) + ca * cb;
            r.set_coeff(ea + eb, s);
        }
    }
    return r;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const Int& c) {
    LaurentPoly1 r;
    r.var_ = a.var_;
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms_) r.terms_[e] = k * c;
    return r;
}

LaurentPoly1 LaurentPoly1::shifted(long k) const {
    LaurentPoly1 r;
    r.var_ = var_;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly1 LaurentPoly1::normalized() const {
    if (is_zero()) return *this;
    return shifted(-min_exp());
}

Rational LaurentPoly1::eval(const Rational& x) const {
    if (!is_zero() && min_exp() < 0 && x.is_zero()) {
        throw std::domain_error("eval at 0 with negative exponents");
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += Rational(c) * pow_rational(x, e);
    return acc;
}

LaurentPoly1 LaurentPoly1::exact_div(const LaurentPoly1& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return *this;
    // Reduce to ordinary division: t^a F / t^b G = t^(a-b) (F / G).
    const long shift_back = min_exp() - divisor.min_exp();
    LaurentPoly1 rem = normalized();
    const LaurentPoly1 div = divisor.normalized();
    LaurentPoly1 quot;
    quot.var_ = var_;
    const Int dlc = div.leading_coeff();
    const long dmax = div.max_exp();
    while (!rem.is_zero()) {
        Int rc = rem.leading_coeff();
        Int q = rc / dlc;
        if (q * dlc != rc) throw std::domain_error("exact_div: inexact leading coefficient");
        long sh = rem.max_exp() - dmax;
        LaurentPoly1 term = LaurentPoly1::monomial(q, sh, var_);
        quot += term;
        rem -= term * div;
        if (!rem.is_zero() && rem.max_exp() >= dmax + sh) {
            throw std::domain_error("exact_div: degree did not drop");
        }
        if (!rem.is_zero() && rem.max_exp() < dmax) {
            throw std::domain_error("exact_div: nonzero remainder");
        }
    }
    return quot.shifted(shift_back);
}

std::string LaurentPoly1::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        Int a = c < 0 ? Int(-c) : c;
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << var_;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly1& p) { return os << p.str(); }

Int LaurentPoly2::coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::set_coeff(long i, long j, const Int& c) {
    if (c == 0) {
        terms_.erase({i, j});
    } else {
        terms_[{i, j}] = c;
    }
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) {
        Int s = coeff(e.first, e.second) + c;
        set_coeff(e.first, e.second, s);
    }
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            long i = ea.first + eb.first, j = ea.second + eb.second;
            Int s = r.coeff(i, j) + ca * cb;
            r.set_coeff(i, j, s);
        }
    }
    return r;
}

LaurentPoly1 LaurentPoly2::specialize_diagonal(const std::string& var) const {
    LaurentPoly1 p;
    p = LaurentPoly1(Int(0), var);
    for (const auto& [e, c] : terms_) {
        Int s = p.coeff(e.first + e.second) + c;
        p.set_coeff(e.first + e.second, s);
    }
    return p;
}

Rational LaurentPoly2::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        acc += Rational(c) * pow_rational(x, e.first) * pow_rational(y, e.second);
    }
    return acc;
}

std::string LaurentPoly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        Int a = c < 0 ? Int(-c) : c;
        os << a.get_str() << "*t1^" << e.first << "*t2^" << e.second;
        first = false;
    }
    return os.str();
}

}  // namespace knotsurg
