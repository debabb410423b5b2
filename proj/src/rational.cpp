#include "knotsurg/rational.hpp"

#include <ostream>

namespace knotsurg {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(int_from_string(s));
    Int n = int_from_string(s.substr(0, slash));
    Int d = int_from_string(s.substr(slash + 1));
    return Rational(n, d);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace knotsurg
