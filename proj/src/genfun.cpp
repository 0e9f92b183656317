#include "copoly/genfun.hpp"

#include <string>

#include "copoly/errors.hpp"

namespace copoly {

namespace {

Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }

/// 1 + y phi' + y^2 phi'' phi / 2, i.e. phi(x + y phi) / phi.
RSeries phi_ratio(const ClassicalPair& pair, std::size_t N) {
  RSeries f = RSeries::one(N);
  if (N >= 1) f[1] = derivative(pair.phi());
  if (N >= 2) f[2] = pair.phi() * (pair.phi2() / 2);
  return f;
}

RSeries linear_in_y(std::size_t N, RPoly c0, RPoly c1) {
  RSeries s = RSeries::constant(N, std::move(c0));
  if (N >= 1) s[1] = std::move(c1);
  return s;
}

Rational param(const FamilySpec& family, const std::string& key) {
  auto it = family.params.find(key);
  return it == family.params.end() ? Rational(0) : it->second;
}

}  // namespace

RSeries genfun_truncated(const ClassicalPair& pair, std::int64_t n, std::size_t N) {
  auto rows = complementary_rows(pair, n, N);
  RSeries s(N);
  Rational fact(1);
  for (std::size_t nu = 0; nu <= N; ++nu) {
    if (nu > 0) fact *= Rational(static_cast<long>(nu));
    s[nu] = rows[nu] * (Rational(1) / fact);
  }
  return s;
}

GenFunInstance make_genfun(const ClassicalPair& pair, std::int64_t n, std::size_t N) {
  return {pair, n, genfun_truncated(pair, n, N)};
}

RSeries genfun_phi_factor(const ClassicalPair& pair, std::int64_t n, std::size_t N) {
  RSeries f = phi_ratio(pair, N);
  if (n >= 0) return pow(f, static_cast<std::size_t>(n));
  return series_pow_rational(f, from_int(n));
}

RSeries weight_ratio_series(const FamilySpec& family, std::size_t N) {
  const RPoly x = RPoly::x();
  const RPoly one = RPoly::constant(1);
  switch (family.kind) {
    case FamilyKind::hermite: {
      // exp(-2xy - y^2)
      RSeries s = linear_in_y(N, RPoly(), x * Rational(-2));
      if (N >= 2) s[2] = RPoly::constant(-1);
      return series_exp(s);
    }
    case FamilyKind::laguerre: {
      // (1 + y)^alpha exp(-xy)
      auto binom = series_pow_rational(linear_in_y(N, one, one), param(family, "alpha"));
      return series_mul(binom, series_exp(linear_in_y(N, RPoly(), -x)));
    }
    case FamilyKind::jacobi: {
      // (1 - y(1 + x))^alpha (1 + y(1 - x))^beta
      auto left = series_pow_rational(linear_in_y(N, one, -(one + x)), param(family, "alpha"));
      auto right = series_pow_rational(linear_in_y(N, one, one - x), param(family, "beta"));
      return series_mul(left, right);
    }
    case FamilyKind::bessel: {
      // (1 + yx)^alpha exp(2y / (1 + yx)), 2y/(1 + yx) = sum_j 2 (-x)^j y^{j+1}
      auto binom = series_pow_rational(linear_in_y(N, one, x), param(family, "alpha"));
      RSeries geo(N);
      RPoly term = RPoly::constant(2);
      for (std::size_t j = 1; j <= N; ++j) {
        geo[j] = term;
        term *= -x;
      }
      return series_mul(binom, series_exp(geo));
    }
    case FamilyKind::custom:
      break;
  }
  throw UnsupportedFamily("no weight function is defined for custom pair '" + family.name + "'");
}

RSeries genfun_closed_form(const ClassicalPair& pair, std::int64_t n, std::size_t N) {
  auto ratio = weight_ratio_series(pair.spec(), N);
  return series_mul(genfun_phi_factor(pair, n, N), ratio);
}

std::string_view to_string(PdeEquation which) {
  switch (which) {
    case PdeEquation::y_quadratic: return "y_quadratic";
    case PdeEquation::y_lowered: return "y_lowered";
    case PdeEquation::x_quadratic: return "x_quadratic";
    case PdeEquation::x_lowered: return "x_lowered";
    case PdeEquation::y_shifted: return "y_shifted";
  }
  return "y_shifted";
}

PdeEquation parse_pde_equation(std::string_view text) {
  for (auto which : {PdeEquation::y_quadratic, PdeEquation::y_lowered, PdeEquation::x_quadratic,
                     PdeEquation::x_lowered, PdeEquation::y_shifted})
    if (text == to_string(which)) return which;
  throw UnknownEquation("unknown PDE '" + std::string(text) + "'");
}

RSeries pde_residual(const ClassicalPair& pair, std::int64_t n, PdeEquation which, std::size_t N) {
  if (N < 2) throw InvalidParameter("PDE residuals need series order N >= 2");
  const RPoly& phi = pair.phi();
  const RPoly& psi = pair.psi();
  const RPoly dphi = derivative(phi);
  const Rational nm1 = from_int(n - 1);
  const RPoly p1 = dphi * nm1 + psi;  // P_1(x; n)
  const RPoly dp1 = derivative(p1);
  const RSeries g = genfun_truncated(pair, n, N);
  const RSeries y = RSeries::term(N, RPoly::constant(1), 1);

  // Coefficient psi(x + y phi) + (n - 1) phi'(x + y phi) of the y-derivative.
  auto shifted_slope = [&] {
    return poly_shift_substitute(psi, phi, N) + poly_shift_substitute(dphi, phi, N) * nm1;
  };

  switch (which) {
    case PdeEquation::y_quadratic: {
      RSeries rhs = linear_in_y(N, p1, phi * dp1);
      return series_mul(phi_ratio(pair, N), derivative_y(g)) - series_mul(rhs, g);
    }
    case PdeEquation::y_lowered: {
      const RSeries g_prev = genfun_truncated(pair, n - 1, N);
      return derivative_y(g) - series_mul(shifted_slope(), g_prev);
    }
    case PdeEquation::x_quadratic: {
      RSeries brace = linear_in_y(N, dp1, dphi * dp1 - p1 * (pair.phi2() / 2));
      return series_mul(phi_ratio(pair, N), derivative_x(g)) - series_mul(series_mul(brace, y), g);
    }
    case PdeEquation::x_lowered: {
      const RSeries g_prev = genfun_truncated(pair, n - 1, N);
      RSeries bracket = linear_in_y(N, p1, phi * (pair.psi1() + nm1 * pair.phi2()));
      RSeries factor = series_mul(linear_in_y(N, RPoly::constant(1), dphi), bracket);
      return derivative_x(g) * phi - series_mul(factor, g_prev) + g * p1;
    }
    case PdeEquation::y_shifted: {
      RSeries lhs = series_mul(poly_shift_substitute(phi, phi, N), derivative_y(g));
      return lhs - series_mul(shifted_slope(), g) * phi;
    }
  }
  throw UnknownEquation("unknown PDE");
}

}  // namespace copoly
