#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resloc/laurent.hpp"
#include "resloc/rational_function.hpp"
#include "resloc/residue_maps.hpp"

namespace resloc {

// Truncated bivariate formal group law F(X, Y) = sum a_{k,l} X^k Y^l with
// Laurent-polynomial coefficients; entries beyond `order` are zero. Valid
// tables have a_{k,0} = a_{0,k} = delta_{1,k} and a_{k,l} = a_{l,k}.
class FormalGroupLaw {
  public:
    explicit FormalGroupLaw(int order) : order_(order) {}

    int order() const { return order_; }
    void set(int k, int l, LaurentPolynomial a);
    LaurentPolynomial at(int k, int l) const;  // zero when absent
    const std::map<std::pair<int, int>, LaurentPolynomial>& entries() const { return a_; }

  private:
    int order_;
    std::map<std::pair<int, int>, LaurentPolynomial> a_;
};

enum class FglName { Additive, Multiplicative };

struct BuiltinFgl {
    FormalGroupLaw law;
    RationalFunction euler;  // e = Euler class of the weight -1 line
};

// Additive: F = X + Y, e = -u. Multiplicative: F = X + Y - XY, e = 1 - u^-1.
BuiltinFgl fgl_builtin(FglName name);

// Unit-coefficient and symmetry invariants, optionally associativity of the
// induced series up to total degree 6.
bool fgl_validate(const FormalGroupLaw& law, bool check_associativity = false);

// Coefficients b_l of E_{-1} = F(e, y) as a series in y; b_0 = e.
struct EulerSeries {
    std::vector<RationalFunction> b;  // b[l], l = 0..N
};

EulerSeries euler_series(const FormalGroupLaw& law, const RationalFunction& e, int N);

// (sum b_l y^l)^{-1} = e^{-1} + sum_{k>=1} c_k y^k, truncated.
struct InvertedEulerSeries {
    RationalFunction e_inverse;
    std::vector<RationalFunction> c;  // c[k-1] = c_k, k = 1..N
};

InvertedEulerSeries invert_euler_series(const EulerSeries& s, int N);

// Machine check of the two residue-map axioms for a kind against a law:
// rho kills the unlocalized ring (sampled on monomials), rho(e^{-1}) = -1,
// and rho(c_k) = 0 for k = 1..N.
struct AxiomReport {
    std::vector<std::string> axiom1_violations;  // offending monomials, if any
    Rational axiom2_value;                       // rho(e^{-1})
    std::vector<bool> c_kill;                    // rho(c_k) == 0, k = 1..N

    bool passed() const;
};

AxiomReport residue_axiom_check(ResidueKind kind, const FormalGroupLaw& law,
                                const RationalFunction& e, int N);

}  // namespace resloc
