#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace copoly {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator, so equality is canonical-form equality.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p", "p/q" (optionally with surrounding whitespace).
inline Rational parse_rational(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw std::invalid_argument("empty rational");
  std::string s(text.substr(b, e - b + 1));
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw std::invalid_argument("malformed rational '" + s + "'");
    return Rational(Integer(s, 10));
  }
  std::string_view sv(s);
  auto num = sv.substr(0, slash);
  auto den = sv.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(Integer(std::string(num), 10), d);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace copoly

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
