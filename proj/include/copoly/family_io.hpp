#pragma once

#include <filesystem>
#include <string>

#include "copoly/rodrigues.hpp"

#include <json.hpp>

namespace copoly {

/// JSON family description:
///
///   { "name": "my-pair", "phi": ["1", "0", "-1"], "psi": ["0", "-2"],
///     "params": { "alpha": "1/3" }, "u0": "1" }
///
/// Coefficients are ascending "p/q" strings. When phi and psi are both
/// absent, name must be a catalog family and params select its parameters.
FamilySpec family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FamilySpec& spec);

/// Throws InvalidParameter when the file cannot be read or parsed.
FamilySpec load_family_file(const std::filesystem::path& path);

}  // namespace copoly
