#include "resloc/series.hpp"

#include <sstream>

#include "resloc/errors.hpp"

namespace resloc {

std::string ExpansionAnchor::str() const {
    switch (tag_) {
        case Tag::Zero: return "u=0";
        case Tag::Infinity: return "u=inf";
        case Tag::FinitePoint: return "u=" + point_.str();
    }
    return "?";
}

Rational TruncatedSeries::coeff(long long t_exponent) const {
    const long long idx = t_exponent - min_exp_;
    if (idx < 0 || idx >= static_cast<long long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(idx)];
}

long long TruncatedSeries::u_exponent(std::size_t index) const {
    const long long t_exp = min_exp_ + static_cast<long long>(index);
    return anchor_.tag() == ExpansionAnchor::Tag::Infinity ? -t_exp : t_exp;
}

std::string TruncatedSeries::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    std::string var;
    switch (anchor_.tag()) {
        case ExpansionAnchor::Tag::Zero:
        case ExpansionAnchor::Tag::Infinity: var = "u"; break;
        case ExpansionAnchor::Tag::FinitePoint:
            var = anchor_.point().sign() >= 0 ? "(u-" + anchor_.point().str() + ")"
                                              : "(u+" + (-anchor_.point()).str() + ")";
            break;
    }
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Rational c = coeffs_[i];
        if (c.is_zero()) continue;
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
        const long long e = u_exponent(i);
        const bool unit = (c == Rational(1));
        if (e == 0) {
            os << c.str();
        } else {
            if (!unit) os << c.str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Coefficients of n0/d0 as a power series in t, t^0..t^(count-1).
// Requires d0(0) != 0.
std::vector<Rational> series_divide(const Polynomial& n0, const Polynomial& d0, long long count) {
    std::vector<Rational> out;
    if (count <= 0) return out;
    out.reserve(static_cast<std::size_t>(count));
    const Rational lead = d0.coeff(0);
    for (long long k = 0; k < count; ++k) {
        Rational acc = n0.coeff(static_cast<std::size_t>(k));
        for (long long j = 1; j <= k; ++j) {
            const Rational dj = d0.coeff(static_cast<std::size_t>(j));
            if (dj.is_zero()) continue;
            acc -= dj * out[static_cast<std::size_t>(k - j)];
        }
        out.push_back(acc / lead);
    }
    return out;
}

}  // namespace

TruncatedSeries expand(const RationalFunction& f, const ExpansionAnchor& anchor, long long N) {
    if (f.is_zero()) return TruncatedSeries(anchor, 0, {}, N);

    // Rewrite f in the local variable t: f = t^offset * n(t)/d(t), n(0), d(0) != 0.
    Polynomial n;
    Polynomial d;
    long long offset = 0;
    switch (anchor.tag()) {
        case ExpansionAnchor::Tag::Zero:
            n = f.num();
            d = f.den();
            break;
        case ExpansionAnchor::Tag::FinitePoint:
            n = f.num().shifted_arg(anchor.point());
            d = f.den().shifted_arg(anchor.point());
            break;
        case ExpansionAnchor::Tag::Infinity:
            n = f.num().reversed();
            d = f.den().reversed();
            offset = static_cast<long long>(f.den().degree()) - static_cast<long long>(f.num().degree());
            break;
    }
    const long long val_n = static_cast<long long>(n.valuation());
    const long long val_d = static_cast<long long>(d.valuation());
    const long long t_min = val_n - val_d + offset;
    const long long count = N - t_min + 1;
    if (count <= 0) return TruncatedSeries(anchor, 0, {}, N);
    auto coeffs = series_divide(n.strip_valuation(), d.strip_valuation(), count);
    return TruncatedSeries(anchor, t_min, std::move(coeffs), N);
}

Rational constant_term(const RationalFunction& f, SeriesSide side) {
    const auto anchor =
        side == SeriesSide::PlusSeries ? ExpansionAnchor::zero() : ExpansionAnchor::infinity();
    return expand(f, anchor, 0).coeff(0);
}

Rational residue_at(const RationalFunction& f, const Rational& a) {
    return expand(f, ExpansionAnchor::at(a), -1).coeff(-1);
}

Rational residue_at_infinity(const RationalFunction& f) {
    return -expand(f, ExpansionAnchor::infinity(), 1).coeff(1);
}

}  // namespace resloc
