#include "resloc/rational_function.hpp"

#include <ostream>

#include "resloc/errors.hpp"

namespace resloc {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) fail(Errc::ZeroDenominator, "rational function with denominator 0");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(Rational(1));
        return;
    }
    const Polynomial g = Polynomial::gcd(num, den);
    Polynomial n = num.exact_div(g);
    Polynomial d = den.exact_div(g);
    const Rational lead = d.leading();
    num_ = lead.reciprocal() * n;
    den_ = lead.reciprocal() * d;
}

RationalFunction::RationalFunction(const LaurentPolynomial& p) {
    auto [num, upower] = p.as_fraction_over_u_power();
    *this = RationalFunction(num, Polynomial::monomial(Rational(1), upower));
}

bool RationalFunction::is_laurent() const {
    if (den_.is_one()) return true;
    return den_.valuation() == den_.degree();  // monic, so u^k exactly
}

LaurentPolynomial RationalFunction::as_laurent() const {
    if (!is_laurent())
        fail(Errc::NotIntegral, "denominator " + den_.str() + " is not a power of u");
    const long long shift = den_.is_one() ? 0 : static_cast<long long>(den_.degree());
    LaurentPolynomial r;
    for (std::size_t i = 0; i < num_.coefficients().size(); ++i)
        r += LaurentPolynomial::monomial(num_.coefficients()[i], static_cast<long long>(i) - shift);
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) fail(Errc::DivisionByZero, "rational function division by zero");
    *this = RationalFunction(num_ * o.den_, den_ * o.num_);
    return *this;
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) fail(Errc::DivisionByZero, "reciprocal of the zero function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long long e) const {
    if (e < 0) return reciprocal().pow(-e);
    RationalFunction acc(Rational(1));
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational RationalFunction::eval(const Rational& point) const {
    const Rational d = den_.eval(point);
    if (d.is_zero()) fail(Errc::PoleAtPoint, "evaluation at the pole u = " + point.str());
    return num_.eval(point) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    const bool wrap_num = num_.is_zero() ? false : num_.degree() > 0;
    const std::string n = wrap_num ? "(" + num_.str() + ")" : num_.str();
    const bool wrap_den = den_.degree() > 0;
    const std::string d = wrap_den ? "(" + den_.str() + ")" : den_.str();
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
}

}  // namespace resloc
