#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "omegalie/algebra.hpp"
#include "omegalie/representations.hpp"

namespace omegalie {

/// Scalars are literal strings in the exactnum grammar or JSON integers.
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json scalar_to_json(const Scalar& s);

/// Algebra file: {"dim", "basis", "brackets": [{"lhs","rhs","value":{name: scalar}}],
/// "omega": [{"lhs","rhs","value": scalar}]}. An entry for (a,b) implies the
/// negated (b,a) entry; listing both inconsistently is a ValidationError.
/// Malformed documents raise ParseError.
OmegaAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const OmegaAlgebra& g);

/// `[[...], ...]` or `{"matrix": [[...], ...]}`.
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

struct ModuleFile {
  std::optional<std::string> algebra;  // catalog key or path, informational
  ModuleAction action;
};

/// {"algebra"?, "dim": m, "actions": {name: [[...]]}}; actions not listed
/// are zero.
ModuleFile module_from_json(const nlohmann::json& j, const OmegaAlgebra& g);
nlohmann::json module_to_json(const OmegaAlgebra& g, const ModuleAction& m);

/// Reads and parses a JSON file. Throws ParseError, or IoError when the file
/// cannot be read.
nlohmann::json read_json_file(const std::string& path);

/// A catalog key such as `A:2/3`, or a path to an algebra JSON file when a
/// file of that name exists.
OmegaAlgebra resolve_algebra(const std::string& source);

}  // namespace omegalie
