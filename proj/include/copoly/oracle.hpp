#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "copoly/functional.hpp"
#include "copoly/rodrigues.hpp"

namespace copoly {

/// Monic orthogonal sequence: polys[i] has degree i, norms[i] = <u, P_i^2>.
struct MonicOPS {
  std::vector<RPoly> polys;
  std::vector<Rational> norms;
};

/// Gram-Schmidt on 1, x, ..., x^n with respect to u, using only
/// functional_apply. Throws NotQuasiDefinite with the first vanishing
/// Hankel level.
MonicOPS gram_schmidt_ops(const MomentFunctional& u, std::size_t n);

/// G(i, j) = <u, P_i P_j>.
RationalMatrix orthogonality_matrix(const MomentFunctional& u, std::span<const RPoly> polys);

bool is_diagonal(const RationalMatrix& m);

struct RecurrenceCoefficients {
  Rational a;  // <u, x P_n^2> / r_n
  Rational b;  // r_n / r_{n-1}, zero for n = 0
};

/// Monic three-term recurrence P_{n+1} = (x - a_n) P_n - b_n P_{n-1}, for
/// n = 0 .. ops.polys.size() - 2.
std::vector<RecurrenceCoefficients> three_term_coefficients(const MonicOPS& ops,
                                                            const MomentFunctional& u);

/// P_{n+1} - (x - a_n) P_n + b_n P_{n-1} for each n covered by the coefficients.
std::vector<RPoly> three_term_residuals(const MonicOPS& ops,
                                        std::span<const RecurrenceCoefficients> coeffs);

struct CrossValidationReport {
  std::size_t max_degree = 0;
  /// Leading coefficient of P_m(x; m), m = 0..max_degree.
  std::vector<Rational> leading;
  /// Product of per-step leading factors psi' + (m + 2k) phi''/2 along the recursion.
  std::vector<Rational> leading_from_expansion;
  /// The same product with the commonly quoted factor -lambda_{m+2k}/(m+2k).
  std::vector<Rational> leading_from_stated_lemma;
  bool expansion_matches = true;
  bool stated_lemma_matches = true;
};

/// Compares monic P_m(x; m) against the Gram-Schmidt polynomial of degree m
/// for every m <= n. Throws MismatchError at the first disagreeing degree.
CrossValidationReport cross_validate(const ClassicalPair& pair, std::size_t n);

}  // namespace copoly
