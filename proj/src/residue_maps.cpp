#include "resloc/residue_maps.hpp"

#include "resloc/errors.hpp"
#include "resloc/localized_ring.hpp"

namespace resloc {

const char* residue_kind_name(ResidueKind kind) {
    switch (kind) {
        case ResidueKind::BorelRes: return "borel";
        case ResidueKind::Rho1: return "rho1";
        case ResidueKind::Rho0Inf: return "rho0inf";
    }
    return "?";
}

ResidueKind residue_kind_from_name(const std::string& name) {
    if (name == "borel") return ResidueKind::BorelRes;
    if (name == "rho1") return ResidueKind::Rho1;
    if (name == "rho0inf") return ResidueKind::Rho0Inf;
    fail(Errc::SyntaxError, "unknown residue kind '" + name + "' (expected borel, rho1 or rho0inf)");
}

TheoryKind theory_of(ResidueKind kind) {
    return kind == ResidueKind::BorelRes ? TheoryKind::Borel : TheoryKind::KTheory;
}

Rational residue_map(ResidueKind kind, const RationalFunction& f, ResidueDomain domain) {
    if (domain == ResidueDomain::Strict && !localized_membership(f, theory_of(kind)))
        fail(Errc::NotInLocalizedRing,
             "denominator " + f.den().str() + " is outside the " +
                 theory_name(theory_of(kind)) + " localized ring");
    switch (kind) {
        case ResidueKind::BorelRes:
            // u^{-1} coefficient; on the strict domain f is a Laurent
            // polynomial and this is a plain coefficient pick.
            return residue_at(f, Rational(0));
        case ResidueKind::Rho1:
            return -residue_at(f / RationalFunction::var(), Rational(1));
        case ResidueKind::Rho0Inf:
            return constant_term(f, SeriesSide::PlusSeries) -
                   constant_term(f, SeriesSide::MinusSeries);
    }
    fail(Errc::SyntaxError, "unreachable residue kind");
}

}  // namespace resloc
