#include "copoly/format.hpp"

#include <stdexcept>

namespace copoly {

namespace {

std::string x_power(std::size_t k, bool latex) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return latex ? "x^{" + std::to_string(k) + "}" : "x^" + std::to_string(k);
}

/// One term without its sign.
std::string text_term(const Rational& magnitude, std::size_t k) {
  if (k == 0) return to_string(magnitude);
  if (magnitude == 1) return x_power(k, false);
  return to_string(magnitude) + "*" + x_power(k, false);
}

std::string latex_term(const Rational& magnitude, std::size_t k) {
  if (k > 0 && magnitude == 1) return x_power(k, true);
  return to_latex(magnitude) + x_power(k, true);
}

}  // namespace

std::string to_text(const RPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const Rational magnitude = negative ? Rational(-c[k]) : c[k];
    if (out.empty()) out = (negative ? "-" : "") + text_term(magnitude, k);
    else out += (negative ? " - " : " + ") + text_term(magnitude, k);
  }
  return out;
}

std::string to_latex(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  const bool negative = r < 0;
  Integer num = negative ? Integer(-r.get_num()) : Integer(r.get_num());
  return std::string(negative ? "-" : "") + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string to_latex(const RPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const Rational magnitude = negative ? Rational(-c[k]) : c[k];
    if (out.empty()) out = (negative ? "-" : "") + latex_term(magnitude, k);
    else out += (negative ? " - " : " + ") + latex_term(magnitude, k);
  }
  return out;
}

nlohmann::json to_json(const RPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_string(c));
  return j;
}

RPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of rationals");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) coeffs.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer()) coeffs.push_back(Rational(c.get<long>()));
    else throw std::invalid_argument("polynomial coefficient must be a \"p/q\" string or an integer");
  }
  return RPoly(std::move(coeffs));
}

nlohmann::json to_json(const ParamMap& params) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : params) j[k] = to_string(v);
  return j;
}

nlohmann::json to_json(const RSeries& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : s.coeffs()) j.push_back(to_json(p));
  return j;
}

std::string to_text(const RSeries& s) {
  std::string out;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (s[k].is_zero()) continue;
    std::string term = k == 0 ? to_text(s[k])
                              : (k == 1 ? "y" : "y^" + std::to_string(k)) + "*(" + to_text(s[k]) + ")";
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace copoly
