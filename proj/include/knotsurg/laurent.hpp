#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotsurg/int_types.hpp"
#include "knotsurg/rational.hpp"

namespace knotsurg {

/// Integer-coefficient Laurent polynomial in one variable.
/// Invariant: the coefficient map never stores a zero.
class LaurentPoly1 {
public:
    LaurentPoly1() = default;
    explicit LaurentPoly1(const Int& c, const std::string& var = "t");
    explicit LaurentPoly1(long long c) : LaurentPoly1(Int(static_cast<long>(c))) {}

    static LaurentPoly1 monomial(const Int& c, long exp, const std::string& var = "t");
    /// Builds sum coeffs[i] * t^(offset+i). The CLI polynomial input form.
    static LaurentPoly1 from_coeff_list(const std::vector<Int>& coeffs, long offset = 0,
                                        const std::string& var = "t");

    const std::string& var() const { return var_; }
    const std::map<long, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Int coeff(long exp) const;
    void set_coeff(long exp, const Int& c);

    long min_exp() const;  // throws on zero polynomial
    long max_exp() const;
    /// Degree of an ordinary polynomial (== max_exp); throws on zero.
    long degree() const { return max_exp(); }
    Int leading_coeff() const;

    LaurentPoly1 operator-() const;
    LaurentPoly1& operator+=(const LaurentPoly1& o);
    LaurentPoly1& operator-=(const LaurentPoly1& o);
    friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
    friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
    LaurentPoly1& operator*=(const LaurentPoly1& o) { return *this = *this * o; }
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const Int& c);

    friend bool operator==(const LaurentPoly1& a, const LaurentPoly1& b) {
        return a.terms_ == b.terms_;
    }

    /// Multiplication by t^k.
    LaurentPoly1 shifted(long k) const;
    /// t^(-min_exp) * this: the ordinary polynomial with nonzero constant term.
    LaurentPoly1 normalized() const;

    /// Exact evaluation; x must be nonzero when negative exponents are present.
    Rational eval(const Rational& x) const;

    /// Exact quotient; throws if the division leaves a remainder.
    LaurentPoly1 exact_div(const LaurentPoly1& divisor) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly1& p);

private:
    std::map<long, Int> terms_;
    std::string var_ = "t";
};

/// Integer-coefficient Laurent polynomial in two variables.
class LaurentPoly2 {
public:
    using Exp = std::pair<long, long>;

    LaurentPoly2() = default;

    const std::map<Exp, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(long i, long j) const;
    void set_coeff(long i, long j, const Int& c);

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);

    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.terms_ == b.terms_;
    }

    /// Sets t1 = t2 = t.
    LaurentPoly1 specialize_diagonal(const std::string& var = "t") const;

    Rational eval(const Rational& x, const Rational& y) const;

    std::string str() const;

private:
    std::map<Exp, Int> terms_;
};

}  // namespace knotsurg
