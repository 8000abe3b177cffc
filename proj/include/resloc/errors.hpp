#pragma once

#include <stdexcept>
#include <string>

namespace resloc {

// Every domain error names the contract it violated; the CLI prints that
// name and maps it to an exit code.
enum class Errc {
    ZeroDenominator,
    DivisionByZero,
    PoleAtPoint,
    NotInLocalizedRing,
    NotIntegral,
    SideMismatch,
    WrongTheory,
    UnassignedSide,
    ZeroWeight,
    ZeroRestriction,
    BadPolynomial,
    TheoryMismatch,
    NonInvertibleLeadingTerm,
    UndefinedDegree,
    SyntaxError,
    InvalidModel,
    InvalidFgl,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
    throw Error(code, detail);
}

}  // namespace resloc
