#pragma once

#include <string>
#include <vector>

#include "copoly/genfun.hpp"

#include <json.hpp>

namespace copoly {

/// Ascending powers with explicit coefficients, e.g. "-2 + 4*x^2".
/// The output re-parses with parse_poly_expr.
std::string to_text(const RPoly& p);

/// Descending powers, e.g. "4x^{2} - 2", "-\frac{13}{3}x + \frac{5}{3}".
std::string to_latex(const RPoly& p);
std::string to_latex(const Rational& r);

/// Ascending coefficient array of "p/q" strings; the zero polynomial is [].
nlohmann::json to_json(const RPoly& p);
RPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ParamMap& params);

/// Series as an array of coefficient arrays, index = power of y.
nlohmann::json to_json(const RSeries& s);

/// "p0 + y*(p1) + y^2*(p2) ..." with zero coefficients skipped.
std::string to_text(const RSeries& s);

}  // namespace copoly
