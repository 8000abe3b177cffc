#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resloc::cli {

// Runs one command. Exit codes: 0 success, 1 domain errors (NotIntegral,
// NotInLocalizedRing, failed checks under --require-conditions, ...),
// 2 usage and parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resloc::cli
