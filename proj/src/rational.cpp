#include "resloc/rational.hpp"

#include <cctype>
#include <ostream>

#include "resloc/errors.hpp"

namespace resloc {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::PoleAtPoint: return "PoleAtPoint";
        case Errc::NotInLocalizedRing: return "NotInLocalizedRing";
        case Errc::NotIntegral: return "NotIntegral";
        case Errc::SideMismatch: return "SideMismatch";
        case Errc::WrongTheory: return "WrongTheory";
        case Errc::UnassignedSide: return "UnassignedSide";
        case Errc::ZeroWeight: return "ZeroWeight";
        case Errc::ZeroRestriction: return "ZeroRestriction";
        case Errc::BadPolynomial: return "BadPolynomial";
        case Errc::TheoryMismatch: return "TheoryMismatch";
        case Errc::NonInvertibleLeadingTerm: return "NonInvertibleLeadingTerm";
        case Errc::UndefinedDegree: return "UndefinedDegree";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::InvalidModel: return "InvalidModel";
        case Errc::InvalidFgl: return "InvalidFgl";
    }
    return "UnknownError";
}

mpq_class Rational::from_ll(long long n) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
    return mpq_class(mpz_class(static_cast<long>(n)));
}

Rational::Rational(long long num, long long den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(0) {
    if (sgn(den) == 0) fail(Errc::ZeroDenominator, "rational with denominator 0");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) fail(Errc::SyntaxError, "not a rational: '" + text + "'");
        return Rational(mpz_class(text), mpz_class(1));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) fail(Errc::SyntaxError, "not a rational: '" + text + "'");
    return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(Errc::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) fail(Errc::DivisionByZero, "reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long long e) const {
    if (e < 0) return reciprocal().pow(-e);
    mpq_class base = v_;
    mpq_class acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return Rational(std::move(acc));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace resloc
