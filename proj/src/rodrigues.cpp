#include "copoly/rodrigues.hpp"

#include <utility>

#include "copoly/errors.hpp"

namespace copoly {

namespace {

Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }

RPoly linear(const Rational& c0, const Rational& c1) { return RPoly({c0, c1}); }

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::hermite: return "hermite";
    case FamilyKind::laguerre: return "laguerre";
    case FamilyKind::jacobi: return "jacobi";
    case FamilyKind::bessel: return "bessel";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

FamilySpec FamilySpec::hermite() {
  return {FamilyKind::hermite, "hermite", RPoly::constant(1), linear(0, -2), {}, 1};
}

FamilySpec FamilySpec::laguerre(const Rational& alpha) {
  return {FamilyKind::laguerre, "laguerre", RPoly::x(), linear(alpha + 1, -1), {{"alpha", alpha}}, 1};
}

FamilySpec FamilySpec::jacobi(const Rational& alpha, const Rational& beta) {
  return {FamilyKind::jacobi,
          "jacobi",
          RPoly({1, 0, -1}),
          linear(beta - alpha, -(alpha + beta + 2)),
          {{"alpha", alpha}, {"beta", beta}},
          1};
}

FamilySpec FamilySpec::legendre() {
  auto spec = jacobi(0, 0);
  spec.name = "legendre";
  return spec;
}

FamilySpec FamilySpec::bessel(const Rational& alpha) {
  return {FamilyKind::bessel, "bessel", RPoly({0, 0, 1}), linear(2, alpha + 2), {{"alpha", alpha}}, 1};
}

FamilySpec FamilySpec::custom(std::string name, RPoly phi, RPoly psi, Rational u0, ParamMap params) {
  return {FamilyKind::custom, std::move(name), std::move(phi), std::move(psi), std::move(params),
          std::move(u0)};
}

FamilySpec family_by_name(std::string_view name, const ParamMap& params) {
  auto take = [&](std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : params) {
      bool ok = false;
      for (auto a : allowed) ok = ok || key == a;
      if (!ok) throw InvalidParameter("family '" + std::string(name) + "' takes no parameter '" + key + "'");
    }
  };
  auto param = [&](const std::string& key) {
    auto it = params.find(key);
    return it == params.end() ? Rational(0) : it->second;
  };
  if (name == "hermite") {
    take({});
    return FamilySpec::hermite();
  }
  if (name == "laguerre") {
    take({"alpha"});
    return FamilySpec::laguerre(param("alpha"));
  }
  if (name == "jacobi") {
    take({"alpha", "beta"});
    return FamilySpec::jacobi(param("alpha"), param("beta"));
  }
  if (name == "legendre") {
    take({});
    return FamilySpec::legendre();
  }
  if (name == "bessel") {
    take({"alpha"});
    return FamilySpec::bessel(param("alpha"));
  }
  throw InvalidParameter("unknown family '" + std::string(name) + "'");
}

ClassicalPair::ClassicalPair(FamilySpec spec, MomentFunctional u)
    : spec_(std::move(spec)), u_(std::move(u)) {
  check_pearson_degrees(spec_.phi, spec_.psi);
}

ClassicalPair pair_from_family(const FamilySpec& spec, std::size_t max_order) {
  check_pearson_degrees(spec.phi, spec.psi);
  return ClassicalPair(spec, moments_from_pearson(spec.phi, spec.psi, spec.u0, max_order));
}

MomentFunctional shifted_functional(const ClassicalPair& pair, std::size_t k) {
  MomentFunctional out = pair.u();
  for (std::size_t i = 0; i < k; ++i) out = functional_poly_mul(pair.phi(), out);
  return out;
}

RPoly psi_k(const ClassicalPair& pair, std::int64_t k) {
  return pair.psi() + derivative(pair.phi()) * from_int(k);
}

RPoly rodrigues_r1(const ClassicalPair& pair, std::int64_t k, const RPoly& p) {
  return pair.phi() * derivative(p) + psi_k(pair, k) * p;
}

RPoly rodrigues_rk(const ClassicalPair& pair, std::size_t k, std::int64_t l, const RPoly& p) {
  // Innermost operator carries base index l + k - 1.
  RPoly out = p;
  for (std::size_t i = k; i-- > 0;) out = rodrigues_r1(pair, l + static_cast<std::int64_t>(i), out);
  return out;
}

std::vector<RPoly> complementary_rows(const ClassicalPair& pair, std::int64_t n, std::size_t count) {
  std::vector<RPoly> rows;
  rows.reserve(count + 1);
  rows.push_back(RPoly::constant(1));
  const RPoly dphi = derivative(pair.phi());
  for (std::size_t nu = 0; nu < count; ++nu) {
    const RPoly& p = rows.back();
    const std::int64_t shift = n - static_cast<std::int64_t>(nu) - 1;
    rows.push_back(pair.phi() * derivative(p) + (pair.psi() + dphi * from_int(shift)) * p);
  }
  return rows;
}

RPoly complementary(const ClassicalPair& pair, std::size_t n, std::size_t nu) {
  if (nu > n) throw IndexError("complementary polynomial needs nu <= n");
  return complementary_rows(pair, static_cast<std::int64_t>(n), nu).back();
}

CompTable complementary_table(const ClassicalPair& pair, std::size_t n) {
  return {n, complementary_rows(pair, static_cast<std::int64_t>(n), n), Rational(1)};
}

Rational lambda_n(const ClassicalPair& pair, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  return -nn * pair.psi1() - nn * (nn - 1) * pair.phi2() / 2;
}

Rational mu_eigenvalue(const ClassicalPair& pair, std::size_t n, std::size_t nu) {
  if (nu > n) throw IndexError("eigenvalue mu_{n,nu} needs nu <= n");
  const Rational nn(static_cast<long>(n)), vv(static_cast<long>(nu));
  return -vv * ((nn - (vv + 1) / 2) * pair.phi2() + pair.psi1());
}

RPoly ode_residual(const ClassicalPair& pair, std::size_t n, std::size_t nu) {
  if (nu > n) throw IndexError("ODE residual needs nu <= n");
  const RPoly p = complementary(pair, n, nu);
  const RPoly dp = derivative(p);
  const RPoly coeff =
      derivative(pair.phi()) * Rational(static_cast<long>(n - nu)) + pair.psi();
  return pair.phi() * derivative(dp) + coeff * dp + p * mu_eigenvalue(pair, n, nu);
}

std::vector<Rational> sturm_liouville_residual(const ClassicalPair& pair, std::size_t n,
                                               std::size_t nu, std::size_t N) {
  if (nu > n) throw IndexError("Sturm-Liouville residual needs nu <= n");
  const RPoly p = complementary(pair, n, nu);
  auto flux = functional_derivative(
      functional_poly_mul(derivative(p), shifted_functional(pair, n - nu + 1)));
  auto source = mu_eigenvalue(pair, n, nu) * functional_poly_mul(p, shifted_functional(pair, n - nu));
  return (flux + source).moments(N + 1);
}

std::vector<Rational> rodrigues_formula_residual(const ClassicalPair& pair, std::size_t n,
                                                 std::size_t nu, std::size_t mu, std::size_t N) {
  if (!(mu <= nu && nu <= n)) throw IndexError("Rodrigues formula residual needs mu <= nu <= n");
  auto lhs = functional_poly_mul(complementary(pair, n, nu), shifted_functional(pair, n - nu));
  auto inner = functional_poly_mul(complementary(pair, n, mu), shifted_functional(pair, n - mu));
  return (lhs - functional_derivative(inner, nu - mu)).moments(N + 1);
}

Rational derivative_proportionality(const ClassicalPair& pair, std::size_t n, std::size_t nu) {
  if (nu > n) throw IndexError("derivative proportionality needs nu <= n");
  const RPoly pn_deriv = derivative(complementary(pair, n, n), nu);
  if (pn_deriv.is_zero()) throw NotProportional("P_n^(nu) vanishes identically");
  auto c = proportionality_constant(complementary(pair, n, n - nu), pn_deriv);
  if (!c)
    throw NotProportional("P_{n-nu}(x;n) is not proportional to P_n^(nu) at n = " +
                          std::to_string(n) + ", nu = " + std::to_string(nu));
  return *c;
}

Rational leading_coeff_probe(const ClassicalPair& pair, std::size_t k, std::size_t m) {
  const RPoly probe = RPoly::monomial(1, m);
  const RPoly image = rodrigues_r1(pair, static_cast<std::int64_t>(k), probe);
  return image.coeff(m + 1);
}

Rational lemma_leading_coeff(const ClassicalPair& pair, std::size_t k, std::size_t m,
                             std::size_t offset) {
  const Rational index(static_cast<long>(m + 2 * k + offset));
  return pair.psi1() + (index - 1) * pair.phi2() / 2;
}

}  // namespace copoly
