#pragma once

#include <string>

#include "resloc/laurent.hpp"
#include "resloc/polynomial.hpp"
#include "resloc/rational.hpp"

namespace resloc {

// Reduced ratio of univariate polynomials in u. Normal form: the denominator
// is monic and coprime to the numerator; zero is 0/1. Two equal functions
// compare equal componentwise.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    RationalFunction(int constant) : RationalFunction(Rational(constant)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(const Polynomial& num, const Polynomial& den);  // normalizes
    RationalFunction(const LaurentPolynomial& p);

    static RationalFunction var() { return RationalFunction(Polynomial::var()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    // True when the denominator is a power of u (including u^0).
    bool is_laurent() const;
    // Conversion valid exactly when is_laurent(); throws NotIntegral otherwise.
    LaurentPolynomial as_laurent() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction reciprocal() const;
    RationalFunction pow(long long e) const;

    Rational eval(const Rational& point) const;  // PoleAtPoint on a root of den

    std::string str() const;

  private:
    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace resloc
