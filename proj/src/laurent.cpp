#include "resloc/laurent.hpp"

#include <ostream>
#include <sstream>

#include "resloc/errors.hpp"
#include "resloc/theory.hpp"

namespace resloc {

const char* theory_name(TheoryKind t) {
    return t == TheoryKind::Borel ? "borel" : "ktheory";
}

TheoryKind theory_from_name(const std::string& name) {
    if (name == "borel") return TheoryKind::Borel;
    if (name == "ktheory") return TheoryKind::KTheory;
    fail(Errc::InvalidModel, "unknown theory '" + name + "' (expected borel or ktheory)");
}

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
    insert(0, constant);
}

LaurentPolynomial::LaurentPolynomial(std::map<long long, Rational> terms) {
    for (auto& [e, c] : terms) insert(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, long long exponent) {
    LaurentPolynomial p;
    p.insert(exponent, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_polynomial(const Polynomial& p) {
    LaurentPolynomial r;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        r.insert(static_cast<long long>(i), p.coefficients()[i]);
    return r;
}

void LaurentPolynomial::insert(long long e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Rational LaurentPolynomial::coeff(long long exponent) const {
    auto it = t_.find(exponent);
    return it == t_.end() ? Rational(0) : it->second;
}

long long LaurentPolynomial::min_exponent() const {
    if (is_zero()) fail(Errc::UndefinedDegree, "exponent bounds of the zero Laurent polynomial");
    return t_.begin()->first;
}

long long LaurentPolynomial::max_exponent() const {
    if (is_zero()) fail(Errc::UndefinedDegree, "exponent bounds of the zero Laurent polynomial");
    return t_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.t_) insert(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.t_) insert(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.insert(ea + eb, ca * cb);
    return r;
}

LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& p) {
    LaurentPolynomial r;
    for (const auto& [e, c] : p.t_) r.insert(e, s * c);
    return r;
}

Rational LaurentPolynomial::eval(const Rational& x) const {
    if (x.is_zero() && !is_zero() && min_exponent() < 0)
        fail(Errc::PoleAtPoint, "Laurent polynomial with negative exponents evaluated at 0");
    Rational acc(0);
    for (const auto& [e, c] : t_) acc += c * x.pow(e);
    return acc;
}

std::pair<Polynomial, std::size_t> LaurentPolynomial::as_fraction_over_u_power() const {
    if (is_zero()) return {{}, 0};
    const long long shift = min_exponent() < 0 ? -min_exponent() : 0;
    std::vector<Rational> coeffs(static_cast<std::size_t>(max_exponent() + shift) + 1);
    for (const auto& [e, c] : t_) coeffs[static_cast<std::size_t>(e + shift)] = c;
    return {Polynomial(std::move(coeffs)), static_cast<std::size_t>(shift)};
}

std::string LaurentPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        const long long e = it->first;
        const bool unit = (c == Rational(1));
        if (e == 0) {
            os << c.str();
        } else {
            if (!unit) os << c.str() << "*";
            os << "u";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
    return os << p.str();
}

}  // namespace resloc
