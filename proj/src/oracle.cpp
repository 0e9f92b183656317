#include "copoly/oracle.hpp"

#include "copoly/errors.hpp"

namespace copoly {

MonicOPS gram_schmidt_ops(const MomentFunctional& u, std::size_t n) {
  if (auto level = first_singular_hankel(u, n)) throw NotQuasiDefinite(*level);
  MonicOPS ops;
  for (std::size_t m = 0; m <= n; ++m) {
    const RPoly xm = RPoly::monomial(1, m);
    RPoly p = xm;
    for (std::size_t j = 0; j < m; ++j)
      p -= ops.polys[j] * (functional_apply(u, xm * ops.polys[j]) / ops.norms[j]);
    ops.norms.push_back(functional_apply(u, p * p));
    ops.polys.push_back(std::move(p));
  }
  return ops;
}

RationalMatrix orthogonality_matrix(const MomentFunctional& u, std::span<const RPoly> polys) {
  const auto size = static_cast<Eigen::Index>(polys.size());
  RationalMatrix g(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = i; j < size; ++j) {
      g(i, j) = functional_apply(u, polys[static_cast<std::size_t>(i)] * polys[static_cast<std::size_t>(j)]);
      g(j, i) = g(i, j);
    }
  return g;
}

bool is_diagonal(const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

std::vector<RecurrenceCoefficients> three_term_coefficients(const MonicOPS& ops,
                                                            const MomentFunctional& u) {
  std::vector<RecurrenceCoefficients> out;
  if (ops.polys.size() < 2) return out;
  const RPoly x = RPoly::x();
  for (std::size_t n = 0; n + 1 < ops.polys.size(); ++n) {
    Rational a = functional_apply(u, x * ops.polys[n] * ops.polys[n]) / ops.norms[n];
    Rational b = n == 0 ? Rational(0) : Rational(ops.norms[n] / ops.norms[n - 1]);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

std::vector<RPoly> three_term_residuals(const MonicOPS& ops,
                                        std::span<const RecurrenceCoefficients> coeffs) {
  std::vector<RPoly> out;
  const RPoly x = RPoly::x();
  for (std::size_t n = 0; n < coeffs.size() && n + 1 < ops.polys.size(); ++n) {
    RPoly r = ops.polys[n + 1] - (x - RPoly::constant(coeffs[n].a)) * ops.polys[n];
    if (n > 0) r += ops.polys[n - 1] * coeffs[n].b;
    out.push_back(std::move(r));
  }
  return out;
}

CrossValidationReport cross_validate(const ClassicalPair& pair, std::size_t n) {
  const MonicOPS ops = gram_schmidt_ops(pair.u(), n);
  CrossValidationReport report;
  report.max_degree = n;
  for (std::size_t m = 0; m <= n; ++m) {
    const RPoly pm = complementary(pair, m, m);
    if (!(pm.degree() == m)) throw MismatchError(m, "P_m(x; m) does not have degree m");
    if (!(monic(pm) == ops.polys[m]))
      throw MismatchError(m, "monic P_m(x; m) differs from the Gram-Schmidt polynomial");

    // Step nu -> nu + 1 applies R_1(phi, u_k) with k = m - nu - 1 to a degree-nu polynomial.
    Rational expanded(1), stated(1);
    for (std::size_t nu = 0; nu < m; ++nu) {
      const std::size_t k = m - nu - 1;
      expanded *= lemma_leading_coeff(pair, k, nu, 1);
      stated *= lemma_leading_coeff(pair, k, nu, 0);
    }
    report.expansion_matches = report.expansion_matches && expanded == pm.leading();
    report.stated_lemma_matches = report.stated_lemma_matches && stated == pm.leading();
    report.leading.push_back(pm.leading());
    report.leading_from_expansion.push_back(std::move(expanded));
    report.leading_from_stated_lemma.push_back(std::move(stated));
  }
  return report;
}

}  // namespace copoly
