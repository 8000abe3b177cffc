#pragma once

#include <map>
#include <string>

#include "resloc/polynomial.hpp"
#include "resloc/rational.hpp"

namespace resloc {

// Finite Laurent polynomial in u: a map exponent -> nonzero coefficient.
// Elements of Q[u, u^-1]; zero is the empty map.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    LaurentPolynomial(const Rational& constant);
    explicit LaurentPolynomial(std::map<long long, Rational> terms);

    static LaurentPolynomial monomial(const Rational& c, long long exponent);
    static LaurentPolynomial from_polynomial(const Polynomial& p);

    bool is_zero() const { return t_.empty(); }
    Rational coeff(long long exponent) const;
    long long min_exponent() const;  // UndefinedDegree on zero
    long long max_exponent() const;
    const std::map<long long, Rational>& terms() const { return t_; }

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& p);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.t_ == b.t_; }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    Rational eval(const Rational& x) const;  // PoleAtPoint at x = 0 with negative exponents

    // The polynomial u^{-min_exponent} * this when min_exponent < 0, else
    // the polynomial itself; i.e. numerator over the power of u returned in
    // the second slot.
    std::pair<Polynomial, std::size_t> as_fraction_over_u_power() const;

    std::string str() const;

  private:
    void insert(long long e, const Rational& c);

    std::map<long long, Rational> t_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace resloc
