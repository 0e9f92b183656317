#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "copoly/functional.hpp"

namespace copoly {

enum class FamilyKind { hermite, laguerre, jacobi, bessel, custom };

std::string_view to_string(FamilyKind kind);

using ParamMap = std::map<std::string, Rational>;

/// A catalog family with its rational parameters, or a user-supplied pair.
struct FamilySpec {
  FamilyKind kind = FamilyKind::custom;
  std::string name;
  RPoly phi;
  RPoly psi;
  ParamMap params;
  Rational u0 = 1;

  static FamilySpec hermite();
  static FamilySpec laguerre(const Rational& alpha);
  static FamilySpec jacobi(const Rational& alpha, const Rational& beta);
  static FamilySpec legendre();
  static FamilySpec bessel(const Rational& alpha);
  static FamilySpec custom(std::string name, RPoly phi, RPoly psi, Rational u0 = 1,
                           ParamMap params = {});
};

/// Catalog lookup by name ("hermite", "laguerre", "jacobi", "legendre",
/// "bessel"). Parameters not supplied default to zero. Throws InvalidParameter
/// for an unknown name or an unexpected parameter.
FamilySpec family_by_name(std::string_view name, const ParamMap& params = {});

/// (phi, psi, u) with (phi u)' = psi u.
class ClassicalPair {
 public:
  ClassicalPair(FamilySpec spec, MomentFunctional u);

  const RPoly& phi() const { return spec_.phi; }
  const RPoly& psi() const { return spec_.psi; }
  const MomentFunctional& u() const { return u_; }
  const FamilySpec& spec() const { return spec_; }
  FamilyKind kind() const { return spec_.kind; }
  const std::string& name() const { return spec_.name; }
  const ParamMap& params() const { return spec_.params; }

  /// Constant second derivative of phi, and constant derivative of psi.
  Rational phi2() const { return Rational(2 * spec_.phi.coeff(2)); }
  Rational psi1() const { return spec_.psi.coeff(1); }

 private:
  FamilySpec spec_;
  MomentFunctional u_;
};

/// Moments by the Pearson recurrence with u_0 from the spec.
/// Throws InvalidParameter or AdmissibilityViolation.
ClassicalPair pair_from_family(const FamilySpec& spec, std::size_t max_order);

/// u_k = phi^k u, built by repeated functional_poly_mul.
MomentFunctional shifted_functional(const ClassicalPair& pair, std::size_t k);

/// psi + k phi'; (phi u_k)' = psi_k u_k. k may be negative when the
/// complementary recursion is continued past nu = n.
RPoly psi_k(const ClassicalPair& pair, std::int64_t k);

/// R_1(phi, u_k)[p] = phi p' + psi_k p.
RPoly rodrigues_r1(const ClassicalPair& pair, std::int64_t k, const RPoly& p);

/// R_k(phi, u_l)[p] = R_1(phi, u_l)[R_{k-1}(phi, u_{l+1})[p]], R_0 = identity.
RPoly rodrigues_rk(const ClassicalPair& pair, std::size_t k, std::int64_t l, const RPoly& p);

/// Complementary polynomial P_nu(x; n) by the recursion
/// P_{nu+1} = phi P_nu' + (psi + (n - nu - 1) phi') P_nu, P_0 = 1.
/// Throws IndexError if nu > n.
RPoly complementary(const ClassicalPair& pair, std::size_t n, std::size_t nu);

/// Rows 0..count of the same recursion, with no nu <= n restriction. The
/// coefficient n - nu - 1 turns negative past nu = n; n itself may be negative.
std::vector<RPoly> complementary_rows(const ClassicalPair& pair, std::int64_t n, std::size_t count);

struct CompTable {
  std::size_t n = 0;
  std::vector<RPoly> rows;  // rows[nu] = P_nu(x; n)
  Rational b_n = 1;
};

CompTable complementary_table(const ClassicalPair& pair, std::size_t n);

/// lambda_n = -n psi' - n (n - 1) phi'' / 2.
Rational lambda_n(const ClassicalPair& pair, std::size_t n);

/// mu_{n,nu} = -nu ((n - (nu + 1)/2) phi'' + psi').
Rational mu_eigenvalue(const ClassicalPair& pair, std::size_t n, std::size_t nu);

/// phi P'' + ((n - nu) phi' + psi) P' + mu_{n,nu} P for P = P_nu(x; n).
RPoly ode_residual(const ClassicalPair& pair, std::size_t n, std::size_t nu);

/// Moments 0..N of d/dx(P_nu' u_{n-nu+1}) + mu_{n,nu} P_nu u_{n-nu}.
std::vector<Rational> sturm_liouville_residual(const ClassicalPair& pair, std::size_t n,
                                               std::size_t nu, std::size_t N);

/// Moments 0..N of P_nu u_{n-nu} - d^{nu-mu}/dx^{nu-mu} [P_mu u_{n-mu}].
std::vector<Rational> rodrigues_formula_residual(const ClassicalPair& pair, std::size_t n,
                                                 std::size_t nu, std::size_t mu, std::size_t N);

/// c with P_{n-nu}(x; n) = c * d^nu/dx^nu P_n(x; n). Throws NotProportional.
Rational derivative_proportionality(const ClassicalPair& pair, std::size_t n, std::size_t nu);

/// Leading coefficient of R_1(phi, u_k)[x^m]. Expanding gives
/// psi' + (m + 2k) phi''/2.
Rational leading_coeff_probe(const ClassicalPair& pair, std::size_t k, std::size_t m);

/// -lambda_N / N with N = m + 2k + offset, written as psi' + (N - 1) phi''/2 so
/// that N = 0 is covered too. Offset 0 is the commonly quoted form of the
/// leading-coefficient lemma; offset 1 is the one that matches leading_coeff_probe.
Rational lemma_leading_coeff(const ClassicalPair& pair, std::size_t k, std::size_t m,
                             std::size_t offset);

}  // namespace copoly
