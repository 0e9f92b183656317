#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "copoly/rodrigues.hpp"
#include "copoly/series.hpp"

namespace copoly {

using RSeries = SeriesYX<Rational>;

/// The generating function sum_nu y^nu / nu! P_nu(x; n), truncated at order N.
struct GenFunInstance {
  ClassicalPair pair;
  std::int64_t n;
  RSeries series;
};

/// Rows past nu = n continue the complementary recursion. n may be negative.
RSeries genfun_truncated(const ClassicalPair& pair, std::int64_t n, std::size_t N);

GenFunInstance make_genfun(const ClassicalPair& pair, std::int64_t n, std::size_t N);

/// (phi(x + y phi) / phi)^n = (1 + y phi' + y^2 phi'' phi / 2)^n.
RSeries genfun_phi_factor(const ClassicalPair& pair, std::int64_t n, std::size_t N);

/// rho(x + y phi(x)) / rho(x) for the catalog weight of the family.
/// Throws UnsupportedFamily for custom pairs.
RSeries weight_ratio_series(const FamilySpec& family, std::size_t N);

/// genfun_phi_factor times weight_ratio_series.
RSeries genfun_closed_form(const ClassicalPair& pair, std::int64_t n, std::size_t N);

/// PDEs satisfied by G = G(y, x; n), with s = x + y phi(x):
///   y_quadratic  (1 + y phi' + y^2 phi'' phi / 2) G_y = (P_1 + y phi P_1') G
///   y_lowered    G_y = (psi(s) + (n - 1) phi'(s)) G(n - 1)
///   x_quadratic  (1 + y phi' + y^2 phi'' phi / 2) G_x = y (P_1' + y (phi' P_1' - phi'' P_1 / 2)) G
///   x_lowered    phi G_x = (1 + y phi')(P_1 + y phi (psi' + (n - 1) phi'')) G(n - 1) - P_1 G
///   y_shifted    phi(s) G_y = phi (psi(s) + (n - 1) phi'(s)) G
/// where P_1 = (n - 1) phi' + psi.
enum class PdeEquation { y_quadratic, y_lowered, x_quadratic, x_lowered, y_shifted };

std::string_view to_string(PdeEquation which);
/// Inverse of to_string. Throws UnknownEquation.
PdeEquation parse_pde_equation(std::string_view text);

/// Left minus right side of the chosen PDE, evaluated on genfun_truncated.
/// d/dy loses the top coefficient, so only orders 0..N-1 must vanish.
RSeries pde_residual(const ClassicalPair& pair, std::int64_t n, PdeEquation which, std::size_t N);

}  // namespace copoly
