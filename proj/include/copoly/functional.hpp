#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "copoly/poly.hpp"
#include "copoly/rational.hpp"

namespace copoly {

using RPoly = Poly<Rational>;

/// Linear functional on polynomials, represented by its moments
/// u_k = <u, x^k>. Moments are produced on demand by a generator and
/// memoized; a computed moment never changes.
///
/// Copies share the memo. Extension is serialized by an internal lock, so a
/// functional can be read from several threads.
class MomentFunctional {
 public:
  /// Produces u_k given the already-known prefix u_0..u_{k-1}.
  using Generator = std::function<Rational(std::size_t k, std::span<const Rational> known)>;

  /// The zero functional.
  MomentFunctional();
  explicit MomentFunctional(Generator gen, std::vector<Rational> seed = {});

  /// Functional with exactly these moments; asking past them throws MomentsExhausted.
  static MomentFunctional from_moments(std::vector<Rational> moments);

  Rational moment(std::size_t k) const;
  std::vector<Rational> moments(std::size_t count) const;
  /// Number of moments memoized so far.
  std::size_t computed() const;

  friend MomentFunctional operator+(const MomentFunctional& a, const MomentFunctional& b);
  friend MomentFunctional operator-(const MomentFunctional& a, const MomentFunctional& b);
  friend MomentFunctional operator*(const Rational& s, const MomentFunctional& u);

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// <u, p> = sum_i p_i u_i.
Rational functional_apply(const MomentFunctional& u, const RPoly& p);

/// <u', p> = -<u, p'>, i.e. v_k = -k u_{k-1}.
MomentFunctional functional_derivative(const MomentFunctional& u);
MomentFunctional functional_derivative(const MomentFunctional& u, std::size_t times);

/// <h u, p> = <u, h p>, i.e. v_k = sum_j h_j u_{k+j}.
MomentFunctional functional_poly_mul(const RPoly& h, const MomentFunctional& u);

/// (x - c)^{-1} u, paired through theta_c(P) = (P(x) - P(c)) / (x - c):
/// v_k = sum_{j<k} c^{k-1-j} u_j, v_0 = 0.
MomentFunctional functional_div_linear(const Rational& c, const MomentFunctional& u);

/// Moments 0..N of (p u)' - (p u' + p' u).
std::vector<Rational> leibniz_residual(const RPoly& p, const MomentFunctional& u, std::size_t N);

/// phi, psi and the functional tied to them by (phi u)' = psi u.
struct PearsonData {
  RPoly phi;
  RPoly psi;
  MomentFunctional u;
};

/// Throws InvalidParameter unless deg phi <= 2 and deg psi = 1.
void check_pearson_degrees(const RPoly& phi, const RPoly& psi);

/// Solves the moment recurrence obtained by pairing (phi u)' = psi u with x^k:
///   (d + k a) u_{k+1} + (e + k b) u_k + k c u_{k-1} = 0,
/// with phi = a x^2 + b x + c and psi = d x + e. Admissibility d + k a != 0
/// is checked eagerly for k < max_order; later extension checks lazily.
/// Throws AdmissibilityViolation with the first failing k.
MomentFunctional moments_from_pearson(const RPoly& phi, const RPoly& psi, const Rational& u0,
                                      std::size_t max_order);

/// k-th entry is <(phi u)' - psi u, x^k>, k = 0..N.
std::vector<Rational> pearson_residual(const RPoly& phi, const RPoly& psi,
                                       const MomentFunctional& u, std::size_t N);

/// det(u_{i+j})_{i,j=0..n}.
Rational hankel_determinant(const MomentFunctional& u, std::size_t n);
RationalMatrix hankel_matrix(const MomentFunctional& u, std::size_t n);

/// Smallest level <= n whose Hankel determinant vanishes, if any.
std::optional<std::size_t> first_singular_hankel(const MomentFunctional& u, std::size_t n);

bool all_zero(std::span<const Rational> values);

}  // namespace copoly
