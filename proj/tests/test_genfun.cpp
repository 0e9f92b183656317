#include <gtest/gtest.h>

#include "copoly/errors.hpp"
#include "copoly/genfun.hpp"
#include "oracles.hpp"

using namespace copoly;

namespace {

Rational Q(long p, long q = 1) { return make_rational(p, q); }

const Rational kAlpha = Q(1, 3);
const Rational kBeta = 2;

ClassicalPair pair_of(const FamilySpec& spec) { return pair_from_family(spec, 64); }

std::vector<ClassicalPair> catalog() {
  return {pair_of(FamilySpec::hermite()), pair_of(FamilySpec::laguerre(Q(1, 2))),
          pair_of(FamilySpec::jacobi(kAlpha, kBeta)), pair_of(FamilySpec::bessel(1))};
}

RSeries series(std::size_t N, std::vector<RPoly> c) { return RSeries(N, std::move(c)); }

constexpr PdeEquation kAllEquations[] = {PdeEquation::y_quadratic, PdeEquation::y_lowered, PdeEquation::x_quadratic,
                                         PdeEquation::x_lowered, PdeEquation::y_shifted};

}  // namespace

TEST(GenfunTruncated, Examples) {
  auto h = pair_of(FamilySpec::hermite());
  EXPECT_EQ(genfun_truncated(h, 3, 0), RSeries::one(0));
  EXPECT_EQ(genfun_truncated(h, 2, 2), series(2, {RPoly({1}), RPoly({0, -2}), RPoly({-1, 0, 2})}));
  auto l = pair_of(FamilySpec::laguerre(kAlpha));
  EXPECT_EQ(genfun_truncated(l, 1, 1), series(1, {RPoly({1}), RPoly({kAlpha + 1, -1})}));
  auto inst = make_genfun(l, 4, 5);
  EXPECT_EQ(inst.n, 4);
  EXPECT_EQ(inst.series.order(), 5u);
}

TEST(GenfunPhiFactor, Examples) {
  EXPECT_EQ(genfun_phi_factor(pair_of(FamilySpec::hermite()), 5, 4), RSeries::one(4));
  EXPECT_EQ(genfun_phi_factor(pair_of(FamilySpec::laguerre(kAlpha)), 2, 2),
            series(2, {RPoly({1}), RPoly({2}), RPoly({1})}));
  EXPECT_EQ(genfun_phi_factor(pair_of(FamilySpec::jacobi(kAlpha, kBeta)), 1, 2),
            series(2, {RPoly({1}), RPoly({0, -2}), RPoly({-1, 0, 1})}));
  // Negative n: (1 + y)^{-1} for Laguerre.
  EXPECT_EQ(genfun_phi_factor(pair_of(FamilySpec::laguerre(kAlpha)), -1, 3),
            series(3, {RPoly({1}), RPoly({-1}), RPoly({1}), RPoly({-1})}));
}

TEST(WeightRatio, Examples) {
  for (const auto& pair : catalog()) EXPECT_EQ(weight_ratio_series(pair.spec(), 0), RSeries::one(0));
  EXPECT_EQ(weight_ratio_series(FamilySpec::hermite(), 2),
            series(2, {RPoly({1}), RPoly({0, -2}), RPoly({-1, 0, 2})}));
  EXPECT_EQ(weight_ratio_series(FamilySpec::jacobi(kAlpha, kBeta), 1),
            series(1, {RPoly({1}), RPoly({kBeta - kAlpha, -(kAlpha + kBeta)})}));
  EXPECT_THROW(weight_ratio_series(FamilySpec::custom("c", RPoly({1}), RPoly({0, -1})), 2), UnsupportedFamily);
}

TEST(GenfunClosedForm, Examples) {
  auto h = pair_of(FamilySpec::hermite());
  for (std::int64_t n = 0; n <= 4; ++n)
    EXPECT_EQ(genfun_closed_form(h, n, 2), series(2, {RPoly({1}), RPoly({0, -2}), RPoly({-1, 0, 2})}));
  EXPECT_EQ(genfun_closed_form(pair_of(FamilySpec::laguerre(kAlpha)), 1, 1),
            series(1, {RPoly({1}), RPoly({kAlpha + 1, -1})}));
  EXPECT_EQ(genfun_closed_form(pair_of(FamilySpec::legendre()), 1, 1), series(1, {RPoly({1}), RPoly({0, -2})}));
  auto custom = pair_of(FamilySpec::custom("c", RPoly({1}), RPoly({0, -1})));
  EXPECT_THROW(genfun_closed_form(custom, 1, 2), UnsupportedFamily);
}

TEST(GenfunClosedForm, EqualsTruncatedSumOnGrid) {
  for (const auto& pair : catalog())
    for (std::int64_t n = 0; n <= 8; ++n)
      EXPECT_EQ(genfun_truncated(pair, n, 12), genfun_closed_form(pair, n, 12)) << pair.name() << " n=" << n;
}

TEST(GenfunClosedForm, NegativeN) {
  for (const auto& pair : catalog())
    for (std::int64_t n = -3; n < 0; ++n)
      EXPECT_EQ(genfun_truncated(pair, n, 6), genfun_closed_form(pair, n, 6)) << pair.name() << " n=" << n;
}

TEST(GenfunProperties, DerivativeLadder) {
  for (const auto& pair : catalog())
    for (std::size_t n = 0; n <= 6; ++n) {
      RSeries s = genfun_closed_form(pair, static_cast<std::int64_t>(n), 8);
      for (std::size_t mu = 0; mu <= n; ++mu) {
        EXPECT_EQ(s[0], complementary(pair, n, mu)) << pair.name() << n << mu;
        s = derivative_y(s);
      }
    }
}

TEST(GenfunProperties, HermiteIndependentOfN) {
  auto h = pair_of(FamilySpec::hermite());
  const RSeries base = genfun_truncated(h, 0, 10);
  for (std::int64_t n = 1; n <= 8; ++n) EXPECT_EQ(genfun_truncated(h, n, 10), base);
}

TEST(GenfunProperties, MasterIdentityFromShiftSubstitution) {
  for (const auto& pair : catalog())
    for (std::int64_t n = 0; n <= 6; ++n) {
      const std::size_t N = 8;
      const RSeries G = genfun_truncated(pair, n, N);
      const RPoly& phi = pair.phi();
      const RSeries phi_s = poly_shift_substitute(phi, phi, N);
      const RSeries psi_s = poly_shift_substitute(pair.psi(), phi, N);
      const RSeries dphi_s = poly_shift_substitute(derivative(phi), phi, N);
      const RSeries lhs = series_mul(phi_s, derivative_y(G));
      const RSeries rhs = series_mul(RSeries::term(N, phi, 0),
                                     series_mul(psi_s + dphi_s * RPoly::constant(Rational(n - 1)), G));
      EXPECT_TRUE((lhs - rhs).is_zero_through(N - 1)) << pair.name() << " n=" << n;
    }
}

TEST(PdeResidual, HermiteEq12_1) {
  auto h = pair_of(FamilySpec::hermite());
  EXPECT_TRUE(pde_residual(h, 3, PdeEquation::y_quadratic, 3).is_zero_through(2));
}

TEST(PdeResidual, Eq13OrderZero) {
  for (const auto& pair : catalog())
    for (std::int64_t n = 1; n <= 5; ++n) EXPECT_TRUE(pde_residual(pair, n, PdeEquation::y_lowered, 2)[0].is_zero());
}

TEST(PdeResidual, JacobiEq15) {
  auto j = pair_of(FamilySpec::jacobi(kAlpha, kBeta));
  EXPECT_TRUE(pde_residual(j, 4, PdeEquation::x_lowered, 6).is_zero_through(5));
}

TEST(PdeResidual, AllEquationsOnGrid) {
  auto pairs = catalog();
  pairs.push_back(pair_of(FamilySpec::custom("c", RPoly({1, 1, 1}), RPoly({1, Q(5, 2)}))));
  for (const auto& pair : pairs)
    for (std::int64_t n = 0; n <= 6; ++n)
      for (auto which : kAllEquations)
        EXPECT_TRUE(pde_residual(pair, n, which, 8).is_zero_through(7))
            << pair.name() << " n=" << n << " " << to_string(which);
}

TEST(PdeResidual, Errors) {
  auto h = pair_of(FamilySpec::hermite());
  EXPECT_THROW(pde_residual(h, 2, PdeEquation::x_quadratic, 1), InvalidParameter);
  EXPECT_THROW(parse_pde_equation("eq99"), UnknownEquation);
  EXPECT_THROW(parse_pde_equation("13"), UnknownEquation);
  EXPECT_EQ(parse_pde_equation("y_lowered"), PdeEquation::y_lowered);
  EXPECT_EQ(parse_pde_equation("y_quadratic"), PdeEquation::y_quadratic);
  for (auto which : kAllEquations) EXPECT_EQ(parse_pde_equation(to_string(which)), which);
}
