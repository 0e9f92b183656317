#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "copoly/errors.hpp"
#include "copoly/poly.hpp"

namespace copoly {

/// Power series in y truncated at an explicit order N; the coefficient of
/// y^k is a polynomial in x. Always holds exactly N + 1 coefficients.
template <typename Scalar>
class SeriesYX {
 public:
  using PolyT = Poly<Scalar>;

  explicit SeriesYX(std::size_t order) : c_(order + 1) {}
  /// Missing coefficients are zero; coefficients above the order are dropped.
  SeriesYX(std::size_t order, std::vector<PolyT> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
  }

  static SeriesYX constant(std::size_t order, PolyT p) {
    SeriesYX s(order);
    s.c_[0] = std::move(p);
    return s;
  }
  static SeriesYX one(std::size_t order) { return constant(order, PolyT::constant(Scalar(1))); }
  /// p(x) * y^k.
  static SeriesYX term(std::size_t order, PolyT p, std::size_t k) {
    SeriesYX s(order);
    if (k <= order) s.c_[k] = std::move(p);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const PolyT& operator[](std::size_t k) const { return c_[k]; }
  PolyT& operator[](std::size_t k) { return c_[k]; }
  const std::vector<PolyT>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const PolyT& p) { return p.is_zero(); });
  }
  /// True when every coefficient of y^k, k <= upto, is zero.
  bool is_zero_through(std::size_t upto) const {
    for (std::size_t k = 0; k <= std::min(upto, order()); ++k)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  /// Same series at a lower order; raising the order is not allowed since the
  /// missing terms are unknown.
  SeriesYX truncated(std::size_t order) const {
    if (order > this->order())
      throw OrderMismatch("cannot raise truncation order " + std::to_string(this->order()) +
                          " to " + std::to_string(order));
    return SeriesYX(order, std::vector<PolyT>(c_.begin(), c_.begin() + order + 1));
  }

  SeriesYX& operator+=(const SeriesYX& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  SeriesYX& operator-=(const SeriesYX& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  SeriesYX& operator*=(const Scalar& s) {
    for (auto& p : c_) p *= s;
    return *this;
  }
  SeriesYX& operator*=(const PolyT& p) {
    for (auto& q : c_) q *= p;
    return *this;
  }

  friend SeriesYX operator+(SeriesYX a, const SeriesYX& b) { return a += b; }
  friend SeriesYX operator-(SeriesYX a, const SeriesYX& b) { return a -= b; }
  friend SeriesYX operator-(SeriesYX a) {
    for (auto& p : a.c_) p = -p;
    return a;
  }
  friend SeriesYX operator*(SeriesYX a, const Scalar& s) { return a *= s; }
  friend SeriesYX operator*(const Scalar& s, SeriesYX a) { return a *= s; }
  friend SeriesYX operator*(const PolyT& p, SeriesYX a) { return a *= p; }
  friend SeriesYX operator*(SeriesYX a, const PolyT& p) { return a *= p; }
  friend SeriesYX operator*(const SeriesYX& a, const SeriesYX& b) { return series_mul(a, b); }

  friend bool operator==(const SeriesYX& a, const SeriesYX& b) { return a.c_ == b.c_; }

  /// Cauchy product truncated at the common order.
  friend SeriesYX series_mul(const SeriesYX& a, const SeriesYX& b) {
    a.check_order(b);
    const std::size_t n = a.order();
    SeriesYX out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (b.c_[j].is_zero()) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

 private:
  void check_order(const SeriesYX& o) const {
    if (o.order() != order())
      throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                          std::to_string(o.order()));
  }

  std::vector<PolyT> c_;
};

/// Replaces y by y0, returning a polynomial in x.
template <typename Scalar>
Poly<Scalar> evaluate_y(const SeriesYX<Scalar>& s, const Scalar& y0) {
  Poly<Scalar> acc;
  for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * y0 + s[k];
  return acc;
}

template <typename Scalar>
SeriesYX<Scalar> pow(const SeriesYX<Scalar>& s, std::size_t k) {
  auto acc = SeriesYX<Scalar>::one(s.order());
  auto base = s;
  while (k) {
    if (k & 1U) acc = series_mul(acc, base);
    k >>= 1U;
    if (k) base = series_mul(base, base);
  }
  return acc;
}

/// d/dy. The top coefficient becomes zero: it would need the unknown y^{N+1} term.
template <typename Scalar>
SeriesYX<Scalar> derivative_y(const SeriesYX<Scalar>& s) {
  SeriesYX<Scalar> out(s.order());
  for (std::size_t k = 0; k < s.order(); ++k)
    out[k] = s[k + 1] * Scalar(static_cast<long>(k + 1));
  return out;
}

/// d/dx applied coefficientwise.
template <typename Scalar>
SeriesYX<Scalar> derivative_x(const SeriesYX<Scalar>& s) {
  SeriesYX<Scalar> out(s.order());
  for (std::size_t k = 0; k <= s.order(); ++k) out[k] = derivative(s[k]);
  return out;
}

/// p(x + y*q(x)) = sum_j (y q)^j p^{(j)}(x) / j!, truncated at order N.
/// Exact once N >= deg p.
template <typename Scalar>
SeriesYX<Scalar> poly_shift_substitute(const Poly<Scalar>& p, const Poly<Scalar>& q,
                                       std::size_t order) {
  SeriesYX<Scalar> out(order);
  Poly<Scalar> dp = p;
  Poly<Scalar> qpow = Poly<Scalar>::constant(Scalar(1));
  Scalar fact(1);
  for (std::size_t j = 0; j <= order && !dp.is_zero(); ++j) {
    if (j > 0) fact *= Scalar(static_cast<long>(j));
    out[j] = (qpow * dp) * (Scalar(1) / fact);
    dp = derivative(dp);
    qpow *= q;
  }
  return out;
}

/// (1 + t)^alpha with t = s - 1, by the generalized binomial series.
template <typename Scalar>
SeriesYX<Scalar> series_pow_rational(const SeriesYX<Scalar>& s, const Scalar& alpha) {
  if (!(s[0] == Poly<Scalar>::constant(Scalar(1))))
    throw ConstantTermError("series_pow_rational needs constant term 1");
  const std::size_t n = s.order();
  auto t = s;
  t[0] = Poly<Scalar>();
  auto out = SeriesYX<Scalar>::one(n);
  auto tpow = SeriesYX<Scalar>::one(n);
  Scalar binom(1);
  for (std::size_t k = 1; k <= n; ++k) {
    binom *= (alpha - Scalar(static_cast<long>(k - 1)));
    binom /= Scalar(static_cast<long>(k));
    tpow = series_mul(tpow, t);
    if (binom == 0) break;  // nonnegative integer alpha: the binomial sum terminates
    out += tpow * binom;
  }
  return out;
}

/// exp(s) for a series without constant term.
template <typename Scalar>
SeriesYX<Scalar> series_exp(const SeriesYX<Scalar>& s) {
  if (!s[0].is_zero()) throw ConstantTermError("series_exp needs a zero constant term");
  const std::size_t n = s.order();
  auto out = SeriesYX<Scalar>::one(n);
  auto spow = SeriesYX<Scalar>::one(n);
  Scalar fact(1);
  for (std::size_t k = 1; k <= n; ++k) {
    fact *= Scalar(static_cast<long>(k));
    spow = series_mul(spow, s);
    if (spow.is_zero()) break;
    out += spow * (Scalar(1) / fact);
  }
  return out;
}

}  // namespace copoly
