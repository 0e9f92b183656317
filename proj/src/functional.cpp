#include "copoly/functional.hpp"

#include <mutex>
#include <shared_mutex>
#include <utility>

#include "copoly/errors.hpp"
#include "copoly/linalg.hpp"

namespace copoly {

struct MomentFunctional::State {
  mutable std::shared_mutex mutex;
  std::vector<Rational> moments;
  Generator generator;  // empty for an explicit finite table
};

MomentFunctional::MomentFunctional()
    : MomentFunctional([](std::size_t, std::span<const Rational>) { return Rational(0); }) {}

MomentFunctional::MomentFunctional(Generator gen, std::vector<Rational> seed)
    : state_(std::make_shared<State>()) {
  state_->moments = std::move(seed);
  state_->generator = std::move(gen);
}

MomentFunctional MomentFunctional::from_moments(std::vector<Rational> moments) {
  return MomentFunctional(Generator{}, std::move(moments));
}

Rational MomentFunctional::moment(std::size_t k) const {
  {
    std::shared_lock lock(state_->mutex);
    if (k < state_->moments.size()) return state_->moments[k];
  }
  std::unique_lock lock(state_->mutex);
  auto& m = state_->moments;
  while (m.size() <= k) {
    if (!state_->generator) throw MomentsExhausted(k);
    Rational next = state_->generator(m.size(), std::span<const Rational>(m));
    m.push_back(std::move(next));
  }
  return m[k];
}

std::vector<Rational> MomentFunctional::moments(std::size_t count) const {
  if (count == 0) return {};
  moment(count - 1);
  std::shared_lock lock(state_->mutex);
  return {state_->moments.begin(), state_->moments.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::size_t MomentFunctional::computed() const {
  std::shared_lock lock(state_->mutex);
  return state_->moments.size();
}

MomentFunctional operator+(const MomentFunctional& a, const MomentFunctional& b) {
  return MomentFunctional(
      [a, b](std::size_t k, std::span<const Rational>) { return Rational(a.moment(k) + b.moment(k)); });
}

MomentFunctional operator-(const MomentFunctional& a, const MomentFunctional& b) {
  return MomentFunctional(
      [a, b](std::size_t k, std::span<const Rational>) { return Rational(a.moment(k) - b.moment(k)); });
}

MomentFunctional operator*(const Rational& s, const MomentFunctional& u) {
  return MomentFunctional(
      [s, u](std::size_t k, std::span<const Rational>) { return Rational(s * u.moment(k)); });
}

Rational functional_apply(const MomentFunctional& u, const RPoly& p) {
  Rational acc(0);
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) acc += c[i] * u.moment(i);
  return acc;
}

MomentFunctional functional_derivative(const MomentFunctional& u) {
  return MomentFunctional([u](std::size_t k, std::span<const Rational>) {
    if (k == 0) return Rational(0);
    return Rational(-Rational(static_cast<long>(k)) * u.moment(k - 1));
  });
}

MomentFunctional functional_derivative(const MomentFunctional& u, std::size_t times) {
  MomentFunctional out = u;
  for (std::size_t i = 0; i < times; ++i) out = functional_derivative(out);
  return out;
}

MomentFunctional functional_poly_mul(const RPoly& h, const MomentFunctional& u) {
  return MomentFunctional([h, u](std::size_t k, std::span<const Rational>) {
    Rational acc(0);
    const auto& c = h.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) acc += c[j] * u.moment(k + j);
    return acc;
  });
}

MomentFunctional functional_div_linear(const Rational& c, const MomentFunctional& u) {
  // v_k = c v_{k-1} + u_{k-1} is the Horner form of the theta_c sum.
  return MomentFunctional([c, u](std::size_t k, std::span<const Rational> known) {
    if (k == 0) return Rational(0);
    return Rational(c * known[k - 1] + u.moment(k - 1));
  });
}

std::vector<Rational> leibniz_residual(const RPoly& p, const MomentFunctional& u, std::size_t N) {
  auto lhs = functional_derivative(functional_poly_mul(p, u));
  auto rhs = functional_poly_mul(p, functional_derivative(u)) +
             functional_poly_mul(derivative(p), u);
  return (lhs - rhs).moments(N + 1);
}

void check_pearson_degrees(const RPoly& phi, const RPoly& psi) {
  if (phi.degree() > 2u) throw InvalidParameter("deg phi must be at most 2");
  if (phi.is_zero()) throw InvalidParameter("phi must be a nonzero polynomial");
  if (!(psi.degree() == 1u)) throw InvalidParameter("deg psi must be exactly 1");
}

MomentFunctional moments_from_pearson(const RPoly& phi, const RPoly& psi, const Rational& u0,
                                      std::size_t max_order) {
  check_pearson_degrees(phi, psi);
  const Rational a = phi.coeff(2), b = phi.coeff(1), c = phi.coeff(0);
  const Rational d = psi.coeff(1), e = psi.coeff(0);
  for (std::size_t k = 0; k < max_order; ++k)
    if (d + Rational(static_cast<long>(k)) * a == 0)
      throw AdmissibilityViolation(static_cast<std::int64_t>(k));

  MomentFunctional u(
      [a, b, c, d, e](std::size_t next, std::span<const Rational> known) {
        const std::size_t k = next - 1;
        const Rational kk(static_cast<long>(k));
        Rational denom = d + kk * a;
        if (denom == 0) throw AdmissibilityViolation(static_cast<std::int64_t>(k));
        Rational rhs = (e + kk * b) * known[k];
        if (k > 0) rhs += kk * c * known[k - 1];
        return Rational(-rhs / denom);
      },
      {u0});
  if (max_order > 0) u.moment(max_order);
  return u;
}

std::vector<Rational> pearson_residual(const RPoly& phi, const RPoly& psi,
                                       const MomentFunctional& u, std::size_t N) {
  auto lhs = functional_derivative(functional_poly_mul(phi, u));
  auto rhs = functional_poly_mul(psi, u);
  return (lhs - rhs).moments(N + 1);
}

RationalMatrix hankel_matrix(const MomentFunctional& u, std::size_t n) {
  const auto size = static_cast<Eigen::Index>(n + 1);
  RationalMatrix h(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) h(i, j) = u.moment(static_cast<std::size_t>(i + j));
  return h;
}

Rational hankel_determinant(const MomentFunctional& u, std::size_t n) {
  return determinant_exact(hankel_matrix(u, n));
}

std::optional<std::size_t> first_singular_hankel(const MomentFunctional& u, std::size_t n) {
  for (std::size_t level = 0; level <= n; ++level)
    if (hankel_determinant(u, level) == 0) return level;
  return std::nullopt;
}

bool all_zero(std::span<const Rational> values) {
  for (const auto& v : values)
    if (v != 0) return false;
  return true;
}

}  // namespace copoly
