#pragma once

#include "resloc/rational_function.hpp"
#include "resloc/series.hpp"
#include "resloc/theory.hpp"

namespace resloc {

// The three residue maps: the Borel u^{-1}-coefficient map, rho_1 (minus the
// residue of u^{-1}f at u = 1), and rho_{0,inf} = L_{+,0} - L_{-,0}.
enum class ResidueKind { BorelRes, Rho1, Rho0Inf };

const char* residue_kind_name(ResidueKind kind);
ResidueKind residue_kind_from_name(const std::string& name);
TheoryKind theory_of(ResidueKind kind);

// Strict restricts the domain to the localized coefficient ring of the
// matching theory; Relaxed extends to all of Q(u).
enum class ResidueDomain { Strict, Relaxed };

Rational residue_map(ResidueKind kind, const RationalFunction& f,
                     ResidueDomain domain = ResidueDomain::Strict);

}  // namespace resloc
