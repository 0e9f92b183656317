#include "copoly/expr.hpp"

#include <cctype>
#include <string>

#include "copoly/errors.hpp"

namespace copoly {

namespace {

constexpr unsigned long kMaxExponent = 256;

class Parser {
 public:
  Parser(std::string_view text, const ParamMap& params) : text_(text), params_(params) {}

  RPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    RPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  RPoly expr() {
    RPoly acc = term();
    for (;;) {
      skip_ws();
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  RPoly term() {
    RPoly acc = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc *= unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_++;
        RPoly d = unary();
        if (d.degree() > 0u) throw SyntaxError(at, "division by a non-constant polynomial");
        if (d.is_zero()) throw SyntaxError(at, "division by zero");
        acc *= Rational(1) / d.coeff(0);
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(') {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RPoly unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RPoly power() {
    RPoly base = primary();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError(at, "exponent must be a nonnegative integer");
    Integer e = integer();
    if (e > kMaxExponent) throw SyntaxError(at, "exponent too large");
    return pow(base, e.get_ui());
  }

  RPoly primary() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return RPoly::constant(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      if (name == "x") return RPoly::x();
      auto it = params_.find(name);
      if (it == params_.end()) throw UnknownIdentifier(at, name);
      return RPoly::constant(it->second);
    }
    if (accept('(')) {
      RPoly inner = expr();
      skip_ws();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end of expression");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  Integer integer() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    return Integer(digits, 10);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

}  // namespace

RPoly parse_poly_expr(std::string_view text, const ParamMap& params) {
  return Parser(text, params).parse();
}

}  // namespace copoly
