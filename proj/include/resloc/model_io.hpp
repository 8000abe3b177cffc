#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "resloc/fgl.hpp"
#include "resloc/localization.hpp"

namespace resloc {

// JSON wire formats. Rationals are "p/q" text, Laurent polynomials are
// {"exponent": "rational", ...} with decimal-text keys; keys sort, so output
// is canonical.

nlohmann::json laurent_to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const ManifoldModel& m);
ManifoldModel model_from_json(const nlohmann::json& j);

ManifoldModel read_model_file(const std::string& path);
void write_model_file(const ManifoldModel& m, const std::string& path);

// {order, entries: [[k, l, laurent], ...], euler: laurent}; "euler" is
// optional in the file and may instead be supplied on the command line.
struct FglTable {
    FormalGroupLaw law;
    std::optional<RationalFunction> euler;
};

FglTable fgl_from_json(const nlohmann::json& j);
FglTable read_fgl_file(const std::string& path);

}  // namespace resloc
