#pragma once

#include "resloc/rational_function.hpp"
#include "resloc/theory.hpp"

namespace resloc {

// The d-th cyclotomic polynomial, computed by exact division of u^d - 1 by
// the cyclotomic polynomials of the proper divisors of d.
Polynomial cyclotomic(unsigned long long d);

// Membership in the localized coefficient ring S^{-1}h of the theory:
// Borel when the denominator is a power of u; K-theory when every
// irreducible factor of the denominator is u or a cyclotomic polynomial.
bool localized_membership(const RationalFunction& f, TheoryKind theory);

}  // namespace resloc
