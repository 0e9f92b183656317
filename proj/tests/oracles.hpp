#pragma once

// Independent reference constructions used only by tests. Nothing here calls
// the Pearson recurrence, the Rodrigues operator or the complementary recursion.

#include <cstddef>
#include <random>
#include <vector>

#include "copoly/linalg.hpp"
#include "copoly/poly.hpp"
#include "copoly/rational.hpp"

namespace copoly::reference {

using RPoly = Poly<Rational>;

inline Rational binomial(const Rational& top, std::size_t k) {
  Rational b(1);
  for (std::size_t i = 0; i < k; ++i) b = b * (top - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
  return b;
}

/// int x^k exp(-x^2) dx / int exp(-x^2) dx = Gamma((k+1)/2) / Gamma(1/2) for even k.
inline Rational gaussian_moment(std::size_t k) {
  if (k % 2 == 1) return 0;
  Rational m(1);
  for (std::size_t j = 1; j <= k / 2; ++j) m *= Rational(static_cast<long>(2 * j - 1), 2);
  return m;
}

/// int_0^inf x^{k+alpha} e^{-x} / int_0^inf x^alpha e^{-x} = (alpha+1)_k.
inline Rational gamma_moment(const Rational& alpha, std::size_t k) {
  Rational m(1);
  for (std::size_t j = 1; j <= k; ++j) m *= alpha + Rational(static_cast<long>(j));
  return m;
}

/// Normalized moments of (1-x)^alpha (1+x)^beta on [-1, 1], through
/// x = 2t - 1 with t ~ Beta(beta + 1, alpha + 1).
inline Rational jacobi_weight_moment(const Rational& alpha, const Rational& beta, std::size_t k) {
  auto beta_moment = [&](std::size_t j) {
    Rational m(1);
    for (std::size_t i = 0; i < j; ++i) {
      const Rational ii(static_cast<long>(i));
      m *= (beta + 1 + ii) / (alpha + beta + 2 + ii);
    }
    return m;
  };
  Rational sum(0);
  for (std::size_t j = 0; j <= k; ++j) {
    Rational term = binomial(Rational(static_cast<long>(k)), j) * beta_moment(j);
    for (std::size_t i = 0; i < j; ++i) term *= 2;
    if ((k - j) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

/// Physicists' Hermite polynomials from H_{n+1} = 2x H_n - 2n H_{n-1}.
inline RPoly hermite_h(std::size_t n) {
  RPoly prev = RPoly::constant(1);
  if (n == 0) return prev;
  RPoly cur = RPoly({0, 2});
  for (std::size_t k = 1; k < n; ++k) {
    RPoly next = RPoly({0, 2}) * cur - prev * Rational(static_cast<long>(2 * k));
    prev = cur;
    cur = next;
  }
  return cur;
}

/// L_n^alpha(x) = sum_j (-1)^j binom(n + alpha, n - j) x^j / j!.
inline RPoly laguerre_l(std::size_t n, const Rational& alpha) {
  std::vector<Rational> c(n + 1);
  Rational fact(1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) fact *= Rational(static_cast<long>(j));
    Rational v = binomial(alpha + Rational(static_cast<long>(n)), n - j) / fact;
    c[j] = j % 2 ? Rational(-v) : v;
  }
  return RPoly(c);
}

/// Jacobi P_n^{(alpha,beta)} from the explicit double-binomial sum.
inline RPoly jacobi_p(std::size_t n, const Rational& alpha, const Rational& beta) {
  const RPoly xm1 = RPoly({Rational(-1, 2), Rational(1, 2)});
  const RPoly xp1 = RPoly({Rational(1, 2), Rational(1, 2)});
  RPoly sum;
  const Rational nn(static_cast<long>(n));
  for (std::size_t s = 0; s <= n; ++s)
    sum += pow(xm1, s) * pow(xp1, n - s) * (binomial(nn + alpha, n - s) * binomial(nn + beta, s));
  return sum;
}

/// Solves d/dx[p u_{k+1}] = q u_k for q of degree deg p + 1 from moments alone:
/// <q u_k, x^j> = -<u_{k+1}, p (x^j)'> for j = 0..deg q, with u_k = phi^k u.
/// Needs the Hankel matrix of u_k to be nonsingular at that size.
inline RPoly rodrigues_by_moments(const std::vector<Rational>& u, const RPoly& phi, std::size_t k,
                                  const RPoly& p) {
  const std::size_t dq = p.degree().value() + 1;
  const RPoly phik = pow(phi, k);
  const RPoly weight = phik * phi * p;
  auto pair = [&](const RPoly& f) {
    Rational acc(0);
    for (std::size_t i = 0; i < f.size(); ++i) acc += f.coeffs()[i] * u.at(i);
    return acc;
  };
  const auto size = static_cast<Eigen::Index>(dq + 1);
  RationalMatrix a(size, size);
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> b(size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index i = 0; i < size; ++i)
      a(j, i) = pair(phik * RPoly::monomial(1, static_cast<std::size_t>(i + j)));
    b(j) = -pair(weight * derivative(RPoly::monomial(1, static_cast<std::size_t>(j))));
  }
  auto q = solve_exact(a, b);
  return RPoly(std::vector<Rational>(q.data(), q.data() + q.size()));
}

/// Deterministic generator of small rationals and polynomials.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long range = 6, long max_den = 5) {
    return make_rational(integer(-range, range), integer(1, max_den));
  }
  Rational nonzero_rational(long range = 6, long max_den = 5) {
    Rational r;
    do r = rational(range, max_den);
    while (r == 0);
    return r;
  }
  RPoly poly(std::size_t max_degree = 4) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree) + 1)));
    for (auto& v : c) v = rational();
    return RPoly(std::move(c));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace copoly::reference
