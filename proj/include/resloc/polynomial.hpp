#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "resloc/rational.hpp"

namespace resloc {

// Dense univariate polynomial over Rational in the variable u.
// Zero is the empty coefficient list; otherwise the leading coefficient
// is nonzero. Degree of the zero polynomial is undefined and rejected.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(int constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(const Rational& c, std::size_t degree);
    static Polynomial var() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    std::size_t degree() const;  // UndefinedDegree on the zero polynomial
    std::size_t valuation() const;  // lowest exponent with nonzero coefficient
    const Rational& leading() const;
    Rational coeff(std::size_t i) const;  // zero beyond the degree
    const std::vector<Rational>& coefficients() const { return c_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned long long e) const;
    Rational eval(const Rational& x) const;

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
    // Division known to be exact; throws BadPolynomial if a remainder survives.
    Polynomial exact_div(const Polynomial& den) const;
    // Monic gcd; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial monic() const;
    // P(u + a).
    Polynomial shifted_arg(const Rational& a) const;
    // u^deg * P(1/u): the coefficient list reversed.
    Polynomial reversed() const;
    // P / u^valuation.
    Polynomial strip_valuation() const;

    std::string str() const;

  private:
    void trim();

    std::vector<Rational> c_;  // c_[i] is the coefficient of u^i
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace resloc
