#include "resloc/localization.hpp"

#include <set>

#include "resloc/errors.hpp"

namespace resloc {

const char* side_name(Side s) {
    switch (s) {
        case Side::Plus: return "plus";
        case Side::Minus: return "minus";
        case Side::Unassigned: return "unassigned";
    }
    return "?";
}

void ManifoldModel::validate() const {
    std::set<std::string> ids;
    for (const auto& c : components) {
        if (!ids.insert(c.id).second)
            fail(Errc::InvalidModel, "duplicate component id '" + c.id + "'");
        for (long long w : c.weights)
            if (w == 0) fail(Errc::ZeroWeight, "component '" + c.id + "' has a zero weight");
        if (theory == TheoryKind::Borel && !c.restriction.is_zero() &&
            c.restriction.min_exponent() < 0)
            fail(Errc::InvalidModel,
                 "component '" + c.id + "': Borel restriction has a negative exponent");
    }
}

RationalFunction euler_class(TheoryKind theory, const std::vector<long long>& weights) {
    RationalFunction acc(Rational(1));
    for (long long m : weights) {
        if (m == 0) fail(Errc::ZeroWeight, "Euler class of a zero weight");
        if (theory == TheoryKind::KTheory) {
            // 1 - u^m, as a rational function for either sign of m.
            acc *= RationalFunction(Rational(1)) -
                   RationalFunction(LaurentPolynomial::monomial(Rational(1), m));
        } else {
            acc *= RationalFunction(Polynomial::monomial(Rational(m), 1));
        }
    }
    return acc;
}

RationalFunction fixed_term(const FixedComponent& c, TheoryKind theory) {
    return RationalFunction(c.restriction) / euler_class(theory, c.weights);
}

namespace {

LaurentPolynomial to_unlocalized(const RationalFunction& sum, TheoryKind theory) {
    if (theory == TheoryKind::Borel) {
        if (!sum.is_polynomial())
            fail(Errc::NotIntegral,
                 "fixed point sum has denominator " + sum.den().str() + ", not a polynomial");
        return LaurentPolynomial::from_polynomial(sum.num());
    }
    if (!sum.is_laurent())
        fail(Errc::NotIntegral,
             "fixed point sum has denominator " + sum.den().str() + ", not a Laurent polynomial");
    return sum.as_laurent();
}

}  // namespace

LaurentPolynomial pushforward_closed(const ManifoldModel& m) {
    m.validate();
    if (m.components.empty()) fail(Errc::InvalidModel, "pushforward of an empty model");
    RationalFunction sum;
    for (const auto& c : m.components) sum += fixed_term(c, m.theory);
    return to_unlocalized(sum, m.theory);
}

Rational kappa(const ManifoldModel& m, ResidueKind kind) {
    m.validate();
    if (theory_of(kind) != m.theory)
        fail(Errc::WrongTheory, std::string("residue kind ") + residue_kind_name(kind) +
                                    " does not match theory " + theory_name(m.theory));
    Rational acc(0);
    for (const auto& c : m.components) {
        if (c.side != Side::Plus)
            fail(Errc::SideMismatch,
                 "component '" + c.id + "' has side " + side_name(c.side) +
                     "; kappa sums over the fixed points of M = M_plus only");
        acc += residue_map(kind, fixed_term(c, m.theory));
    }
    return acc;
}

Rational multiplicity_zero(const ManifoldModel& m) {
    m.validate();
    if (m.theory != TheoryKind::KTheory)
        fail(Errc::WrongTheory, "multiplicity extraction needs a ktheory model");
    Rational acc(0);
    for (const auto& c : m.components)
        acc += constant_term(fixed_term(c, m.theory), SeriesSide::PlusSeries);
    return acc;
}

long long w_of(const FixedComponent& c) {
    long long acc = 0;
    for (long long w : c.weights) acc += w < 0 ? -w : w;
    return acc;
}

DegreeBounds degree_bounds(const FixedComponent& c) {
    if (c.restriction.is_zero())
        fail(Errc::ZeroRestriction, "degree bounds of the zero restriction on '" + c.id + "'");
    return {c.restriction.min_exponent(), c.restriction.max_exponent()};
}

QrReport qr_check(const ManifoldModel& m) {
    m.validate();
    if (m.theory != TheoryKind::KTheory)
        fail(Errc::WrongTheory, "quantization comparison needs a ktheory model");
    QrReport report;
    report.q_m0 = Rational(0);
    report.q_mred = Rational(0);
    report.defect_plus = Rational(0);
    report.defect_minus = Rational(0);
    report.all_conditions_ok = true;
    for (const auto& c : m.components) {
        if (c.side == Side::Unassigned)
            fail(Errc::UnassignedSide, "component '" + c.id + "' has no side");
        QrComponentCheck check;
        check.id = c.id;
        check.side = c.side;
        check.w = w_of(c);
        // The degree conditions use the weight mass on the component's own
        // side: for data entered with the all-positive (M+) or all-negative
        // (M-) convention this is exactly w(F).
        long long w_pos = 0, w_neg = 0;
        for (long long w : c.weights) (w > 0 ? w_pos : w_neg) += w > 0 ? w : -w;
        check.side_bound = c.side == Side::Plus ? w_pos : w_neg;
        check.zero_restriction = c.restriction.is_zero();
        if (check.zero_restriction) {
            check.ok = true;
        } else {
            const DegreeBounds bounds = degree_bounds(c);
            check.min = bounds.min;
            check.max = bounds.max;
            check.ok = c.side == Side::Plus ? (check.max < check.side_bound)
                                            : (check.min > -check.side_bound);
        }
        report.all_conditions_ok = report.all_conditions_ok && check.ok;

        const RationalFunction term = fixed_term(c, m.theory);
        const Rational lplus = constant_term(term, SeriesSide::PlusSeries);
        const Rational lminus = constant_term(term, SeriesSide::MinusSeries);
        report.q_m0 += lplus;
        if (c.side == Side::Plus) {
            report.q_mred += lplus - lminus;
            report.defect_plus -= lminus;
        } else {
            report.defect_minus -= lplus;
        }
        report.conditions.push_back(std::move(check));
    }
    report.equal = report.q_m0 == report.q_mred;
    return report;
}

bool global_residue_vanishing(const ManifoldModel& m, ResidueKind kind) {
    (void)pushforward_closed(m);  // NotIntegral when the data is inconsistent
    if (theory_of(kind) != m.theory)
        fail(Errc::WrongTheory, std::string("residue kind ") + residue_kind_name(kind) +
                                    " does not match theory " + theory_name(m.theory));
    Rational acc(0);
    for (const auto& c : m.components) acc += residue_map(kind, fixed_term(c, m.theory));
    return acc.is_zero();
}

TruncatedSeries neg_expansion_bound(const Polynomial& P, long long N) {
    if (P.is_zero() || P.coeff(0).is_zero())
        fail(Errc::BadPolynomial, "need nonzero constant and leading coefficients");
    const auto series = expand(RationalFunction(Polynomial(Rational(1)), P),
                               ExpansionAnchor::infinity(), N);
    // Nonzero leading coefficient makes the t-expansion start exactly at deg(P).
    if (!series.is_zero() && series.min_exponent() < static_cast<long long>(P.degree()))
        fail(Errc::BadPolynomial, "expansion exceeded the degree bound");
    return series;
}

}  // namespace resloc
