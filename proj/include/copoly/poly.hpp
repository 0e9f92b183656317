#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "copoly/rational.hpp"

namespace copoly {

/// Polynomial degree with a distinct -infinity value for the zero polynomial.
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !finite_; }
  std::size_t value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial has no finite value");
    return value_;
  }

  /// deg(pq) = deg p + deg q, with -infinity absorbing.
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr Degree operator+(Degree a, std::size_t k) {
    return a.finite_ ? Degree(a.value_ + k) : Degree();
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator==(Degree a, std::size_t d) { return a.finite_ && a.value_ == d; }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, std::size_t d) {
    return a <=> Degree(d);
  }

 private:
  bool finite_ = false;
  std::size_t value_ = 0;
};

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
/// Trailing zeros are never stored, so the zero polynomial is empty.
template <typename Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }
  static Poly monomial(const Scalar& c, std::size_t k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i; zero past the degree.
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  Scalar operator()(const Scalar& at) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

template <typename Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Scalar> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Scalar(static_cast<long>(i));
  return Poly<Scalar>(std::move(out));
}

template <typename Scalar>
Poly<Scalar> derivative(Poly<Scalar> p, std::size_t times) {
  for (std::size_t i = 0; i < times && !p.is_zero(); ++i) p = derivative(p);
  return p;
}

template <typename Scalar>
Poly<Scalar> pow(const Poly<Scalar>& p, std::size_t k) {
  Poly<Scalar> acc = Poly<Scalar>::constant(Scalar(1));
  Poly<Scalar> base = p;
  while (k) {
    if (k & 1U) acc *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return acc;
}

/// p(q(x)).
template <typename Scalar>
Poly<Scalar> compose(const Poly<Scalar>& p, const Poly<Scalar>& q) {
  Poly<Scalar> acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Poly<Scalar>::constant(*it);
  return acc;
}

/// p divided by its leading coefficient.
template <typename Scalar>
Poly<Scalar> monic(const Poly<Scalar>& p) {
  Scalar inv = Scalar(1) / p.leading();
  return p * inv;
}

/// If a = c*b for a scalar c, returns c. b must be nonzero.
template <typename Scalar>
std::optional<Scalar> proportionality_constant(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (b.is_zero()) throw std::invalid_argument("proportionality against the zero polynomial");
  if (a.is_zero()) return Scalar(0);
  if (a.degree() != b.degree()) return std::nullopt;
  Scalar c = a.leading() / b.leading();
  if (!(a == b * c)) return std::nullopt;
  return c;
}

}  // namespace copoly
