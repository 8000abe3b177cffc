#pragma once

#include <string>

#include "resloc/localization.hpp"

namespace resloc {

// Built-in fixture models whose pushforwards are independently checkable.

// CP^1 with the weight-(1, -1) rotation and a degree-k class.
// KTheory: restrictions 1 and u^k; pushforward 1 + u + ... + u^k.
// Borel: restrictions 1 and (1+u)^k; pushforward (1 - (1+u)^k)/u.
// Sides: the weight-1 point is Plus, the weight minus-1 point is Minus.
ManifoldModel build_cp1(long long k, TheoryKind theory = TheoryKind::KTheory);

// CP^n with the standard linear action: components p_0..p_n, weights at p_i
// are {j - i : j != i}, restriction u^{k*i}. KTheory; p_0 is Plus, the rest
// Minus.
ManifoldModel build_cpn(long long n, long long k);

// Fixed points of a product: pairwise id/weight/restriction combination.
// Sides are left Unassigned.
ManifoldModel build_product(const ManifoldModel& m1, const ManifoldModel& m2);

// Recipe grammar:
//   cp1:k=K[,theory=borel|ktheory]
//   cpn:n=N,k=K
//   product(RECIPE,RECIPE)
//   custom:path=FILE        (reads a model JSON file)
ManifoldModel build_from_recipe(const std::string& recipe);

}  // namespace resloc
