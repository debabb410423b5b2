#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "knotsurg/int_types.hpp"

namespace knotsurg {

/// Exact rational number, always kept in lowest terms with positive
/// denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(const Int& n) : v_(n) {}                      // NOLINT(google-explicit-constructor)
    Rational(long long n) : v_(static_cast<long>(n)) {}    // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den);
    Rational(long long num, long long den) : Rational(Int(static_cast<long>(num)), Int(static_cast<long>(den))) {}

    /// Parses "num/den" or a plain decimal integer.
    static Rational from_string(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    /// Largest integer <= this.
    Int floor() const;

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;  // canonical: lowest terms, positive denominator
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace knotsurg
