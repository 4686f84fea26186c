#pragma once

// Canonical JSON forms (sorted keys, "p/q" scalars) for the library types,
// the family / bicharacter definition files, and the state mini-grammar
// used by the command line: "b(-1)b(-2)|0>", "J[e](-1)|0>", "L(-2)|0>".

#include "vxa/bicharacter.hpp"
#include "vxa/vertex_ops.hpp"

#include <json.hpp>

#include <string>

namespace vxa {

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SingularFn& f);
SingularFn singular_from_json(const nlohmann::json& j);

nlohmann::json to_json(const State& s);
State state_from_json(const nlohmann::json& j, FamilyPtr fam);

nlohmann::json to_json(const OpeResult& r);

nlohmann::json family_to_json(const AlgebraFamily& fam);
FamilyPtr family_from_json(const nlohmann::json& j);
FamilyPtr load_family_file(const std::string& path);

nlohmann::json bichar_to_json(const Bicharacter& r);
Bicharacter bichar_from_json(const nlohmann::json& j, FamilyPtr fam);
Bicharacter load_bichar_file(const std::string& path, FamilyPtr fam);

/// Parses the state mini-grammar (whitespace-insensitive). Throws
/// std::invalid_argument on syntax or label errors.
State parse_state_spec(const std::string& text, FamilyPtr fam);

}  // namespace vxa
