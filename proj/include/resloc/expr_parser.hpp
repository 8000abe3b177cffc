#pragma once

#include <string>

#include "resloc/rational_function.hpp"

namespace resloc {

// Parses an expression over integers and the variable u with + - * / ^ and
// parentheses into an exact rational function. Exponents are integers
// (negative allowed) and bind tighter than unary minus. SyntaxError carries
// the offending position.
RationalFunction parse_expression(const std::string& text);

}  // namespace resloc
