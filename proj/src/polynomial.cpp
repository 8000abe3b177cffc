#include "resloc/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "resloc/errors.hpp"

namespace resloc {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::is_one() const {
    return c_.size() == 1 && c_[0] == Rational(1);
}

std::size_t Polynomial::degree() const {
    if (is_zero()) fail(Errc::UndefinedDegree, "degree of the zero polynomial");
    return c_.size() - 1;
}

std::size_t Polynomial::valuation() const {
    if (is_zero()) fail(Errc::UndefinedDegree, "valuation of the zero polynomial");
    std::size_t i = 0;
    while (c_[i].is_zero()) ++i;
    return i;
}

const Rational& Polynomial::leading() const {
    if (is_zero()) fail(Errc::UndefinedDegree, "leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return {};
    Polynomial r = p;
    for (auto& c : r.c_) c *= s;
    return r;
}

Polynomial Polynomial::pow(unsigned long long e) const {
    Polynomial acc(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (num.is_zero()) return {{}, {}};
    if (num.c_.size() < den.c_.size()) return {{}, num};
    std::vector<Rational> rem = num.c_;
    std::vector<Rational> quot(num.c_.size() - den.c_.size() + 1);
    const Rational& lead = den.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + den.c_.size() - 1] / lead;
        if (q.is_zero()) continue;
        quot[k] = q;
        for (std::size_t i = 0; i < den.c_.size(); ++i) rem[k + i] -= q * den.c_[i];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& den) const {
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero()) fail(Errc::BadPolynomial, "division expected to be exact left a remainder");
    return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return leading().reciprocal() * *this;
}

Polynomial Polynomial::shifted_arg(const Rational& a) const {
    // Horner in (u + a).
    Polynomial shift{std::vector<Rational>{a, Rational(1)}};
    Polynomial acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * shift + Polynomial(c_[i]);
    return acc;
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::strip_valuation() const {
    if (is_zero()) return {};
    const std::size_t v = valuation();
    return Polynomial(std::vector<Rational>(c_.begin() + static_cast<long>(v), c_.end()));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational c = c_[i];
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
        const bool unit = (c == Rational(1));
        if (i == 0) {
            os << c.str();
        } else {
            if (!unit) os << c.str() << "*";
            os << "u";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

}  // namespace resloc
