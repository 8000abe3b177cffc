#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "resloc/errors.hpp"

namespace resloc {

// Arbitrary-precision rational number, always in canonical form:
// gcd(|numerator|, denominator) = 1 and denominator >= 1.
// The coefficient field for everything in this library; no floating point.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(mpz_class(n)) {}
    Rational(long long n) : v_(from_ll(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long long num, long long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "p" or "p/q" with optional leading '-'.
    static Rational parse(const std::string& text);

    const mpz_class numerator() const { return v_.get_num(); }
    const mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
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

    Rational reciprocal() const;
    // Integer exponent, negative allowed (reciprocal of a nonzero value).
    Rational pow(long long e) const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Canonical text: "p" when the denominator is 1, else "p/q".
    std::string str() const;

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    static mpq_class from_ll(long long n);

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace resloc
