#pragma once

#include <string>
#include <vector>

#include "resloc/rational_function.hpp"

namespace resloc {

// Where a rational function is expanded: at u = 0, at u = infinity, or at a
// finite rational point.
class ExpansionAnchor {
  public:
    enum class Tag { Zero, Infinity, FinitePoint };

    static ExpansionAnchor zero() { return ExpansionAnchor(Tag::Zero, Rational(0)); }
    static ExpansionAnchor infinity() { return ExpansionAnchor(Tag::Infinity, Rational(0)); }
    static ExpansionAnchor at(const Rational& point) { return ExpansionAnchor(Tag::FinitePoint, point); }

    Tag tag() const { return tag_; }
    const Rational& point() const { return point_; }  // meaningful for FinitePoint only

    std::string str() const;

  private:
    ExpansionAnchor(Tag tag, Rational point) : tag_(tag), point_(std::move(point)) {}

    Tag tag_;
    Rational point_;
};

// Truncated Laurent expansion. Coefficients are indexed by the exponent of
// the local variable t, ascending from min_exponent:
//   t = u       at Zero,
//   t = u - a   at a finite point a,
//   t = u^-1    at Infinity (so the u-exponent of index i is -(min_exponent+i)).
// truncation_order is the highest retained t-exponent; coefficients are exact
// and independent of it. The leading stored coefficient of a nonzero series
// is nonzero.
class TruncatedSeries {
  public:
    TruncatedSeries(ExpansionAnchor anchor, long long min_exponent, std::vector<Rational> coeffs,
                    long long truncation_order)
        : anchor_(std::move(anchor)),
          min_exp_(min_exponent),
          coeffs_(std::move(coeffs)),
          order_(truncation_order) {}

    const ExpansionAnchor& anchor() const { return anchor_; }
    bool is_zero() const { return coeffs_.empty(); }
    long long min_exponent() const { return min_exp_; }
    long long truncation_order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coeff(long long t_exponent) const;
    // External contract: exponents in powers of u.
    long long u_exponent(std::size_t index) const;

    std::string str() const;

  private:
    ExpansionAnchor anchor_;
    long long min_exp_;
    std::vector<Rational> coeffs_;
    long long order_;
};

// The unique Laurent expansion of f at the anchor, truncated at t-exponent N.
// N bounds the highest retained exponent at Zero/FinitePoint and the lowest
// retained u-exponent magnitude at Infinity.
TruncatedSeries expand(const RationalFunction& f, const ExpansionAnchor& anchor, long long N);

enum class SeriesSide { PlusSeries, MinusSeries };

// L_{+,0}(f) or L_{-,0}(f): the u^0 coefficient of the expansion at Zero
// resp. Infinity.
Rational constant_term(const RationalFunction& f, SeriesSide side);

// Coefficient of (u - a)^{-1} in the expansion of f at a; 0 when a is not a pole.
Rational residue_at(const RationalFunction& f, const Rational& a);

// Res_{u=inf}(f du) = -(u^{-1} coefficient of the expansion at Infinity), so
// that residues over all poles and infinity sum to zero.
Rational residue_at_infinity(const RationalFunction& f);

}  // namespace resloc
