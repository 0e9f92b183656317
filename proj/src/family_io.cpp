#include "copoly/family_io.hpp"

#include <fstream>

#include "copoly/errors.hpp"
#include "copoly/format.hpp"

namespace copoly {

namespace {

Rational rational_field(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InvalidParameter("field '" + key + "' must be a rational string");
}

}  // namespace

FamilySpec family_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InvalidParameter("family file must hold a JSON object");
    ParamMap params;
    if (j.contains("params")) {
      for (const auto& [key, value] : j.at("params").items()) {
        if (value.is_string()) params[key] = parse_rational(value.get<std::string>());
        else if (value.is_number_integer()) params[key] = Rational(value.get<long>());
        else throw InvalidParameter("parameter '" + key + "' must be a rational string");
      }
    }
    const std::string name = j.value("name", std::string("custom"));
    const bool has_phi = j.contains("phi"), has_psi = j.contains("psi");
    if (has_phi != has_psi) throw InvalidParameter("family file needs both phi and psi, or neither");

    FamilySpec spec;
    if (!has_phi) {
      spec = family_by_name(name, params);
    } else {
      spec = FamilySpec::custom(name, poly_from_json(j.at("phi")), poly_from_json(j.at("psi")), 1, params);
    }
    if (j.contains("u0")) spec.u0 = rational_field(j, "u0");
    if (spec.u0 == 0) throw InvalidParameter("u0 must be nonzero");
    check_pearson_degrees(spec.phi, spec.psi);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed family file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidParameter(std::string("malformed family file: ") + e.what());
  }
}

nlohmann::json to_json(const FamilySpec& spec) {
  return {{"name", spec.name},
          {"phi", to_json(spec.phi)},
          {"psi", to_json(spec.psi)},
          {"params", to_json(spec.params)},
          {"u0", to_string(spec.u0)}};
}

FamilySpec load_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open family file '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter("family file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return family_from_json(j);
}

}  // namespace copoly
