#pragma once

#include <string>

namespace resloc {

// The two worked coefficient theories: Borel (coefficients Q[u], additive
// formal group law) and K-theory (coefficients Q[u, u^-1], multiplicative).
enum class TheoryKind { Borel, KTheory };

const char* theory_name(TheoryKind t);
TheoryKind theory_from_name(const std::string& name);

}  // namespace resloc
