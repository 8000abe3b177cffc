#pragma once

#include <string>
#include <vector>

#include "resloc/laurent.hpp"
#include "resloc/rational_function.hpp"
#include "resloc/residue_maps.hpp"
#include "resloc/series.hpp"
#include "resloc/theory.hpp"

namespace resloc {

enum class Side { Plus, Minus, Unassigned };

const char* side_name(Side s);

// Isolated fixed point datum: the S^1-weights on its normal bundle, the
// restriction of the class, and an optional side of a splitting hypersurface.
struct FixedComponent {
    std::string id;
    std::vector<long long> weights;  // nonzero
    LaurentPolynomial restriction;   // for Borel models: no negative exponents
    Side side = Side::Unassigned;
};

struct ManifoldModel {
    TheoryKind theory = TheoryKind::KTheory;
    std::string name;
    std::vector<FixedComponent> components;

    // Unique ids, nonzero weights, Borel exponent constraint.
    void validate() const;
};

// Euler class of the normal bundle from its weights.
// KTheory: prod (1 - u^m); Borel: prod (m u).
RationalFunction euler_class(TheoryKind theory, const std::vector<long long>& weights);

// restriction / euler_class, the local term of the fixed point formula.
RationalFunction fixed_term(const FixedComponent& c, TheoryKind theory);

// Sum of the local terms of a closed model; must land in the unlocalized
// ring (Laurent for KTheory, polynomial for Borel), else NotIntegral.
LaurentPolynomial pushforward_closed(const ManifoldModel& m);

// Boundary localization: sum of rho(local term) over the fixed points of a
// manifold with boundary, entered as an all-Plus model.
Rational kappa(const ManifoldModel& m, ResidueKind kind);

// Multiplicity of the trivial representation: sum of L_{+,0}(local term).
Rational multiplicity_zero(const ManifoldModel& m);

// Sum of |weights|.
long long w_of(const FixedComponent& c);

struct DegreeBounds {
    long long min;
    long long max;
};

// Lowest and highest exponents of the restriction.
DegreeBounds degree_bounds(const FixedComponent& c);

struct QrComponentCheck {
    std::string id;
    Side side = Side::Unassigned;
    long long w = 0;           // sum of |weights|
    long long side_bound = 0;  // sum of |weights| with the side's sign
    bool zero_restriction = false;
    long long min = 0;  // restriction exponent bounds; 0 for zero restriction
    long long max = 0;
    bool ok = false;
};

struct QrReport {
    std::vector<QrComponentCheck> conditions;
    Rational q_m0;
    Rational q_mred;
    Rational defect_plus;
    Rational defect_minus;
    bool all_conditions_ok = false;
    bool equal = false;
};

// The quantization-commutes-with-reduction comparison for a side-assigned
// K-theory model: per-component degree conditions, Q(M)_0, Q(M_red), and the
// two defect sums with q_mred - q_m0 = defect_plus + defect_minus.
QrReport qr_check(const ManifoldModel& m);

// With an integral pushforward, the residue map kills the total localization
// sum; returns whether the sum of rho(local term) vanishes.
bool global_residue_vanishing(const ManifoldModel& m, ResidueKind kind);

// Expansion of 1/P at infinity down to u^-N for P with nonzero constant and
// leading coefficients; every exponent is at most -deg(P).
TruncatedSeries neg_expansion_bound(const Polynomial& P, long long N);

}  // namespace resloc
