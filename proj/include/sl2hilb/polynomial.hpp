#pragma once

// Dense univariate polynomials over an exact coefficient ring.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sl2hilb/number.hpp"

namespace sl2hilb::exactalg {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

template <class Coeff>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicPolynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static BasicPolynomial constant(const Coeff& value) { return BasicPolynomial(std::vector<Coeff>{value}); }

  static BasicPolynomial monomial(const Coeff& value, int degree) {
    std::vector<Coeff> c(static_cast<std::size_t>(degree) + 1, Coeff(0));
    c.back() = value;
    return BasicPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coefficients() const { return c_; }

  /// Coefficient of t^i; zero outside the stored range.
  Coeff coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? Coeff(0) : c_[static_cast<std::size_t>(i)];
  }

  /// Lowest exponent with a nonzero coefficient. Requires a nonzero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    throw std::domain_error("valuation of the zero polynomial");
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  BasicPolynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const Coeff& s) { return a *= s; }
  friend BasicPolynomial operator*(const Coeff& s, BasicPolynomial a) { return a *= s; }
  friend BasicPolynomial operator-(BasicPolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicPolynomial(std::move(r));
  }

  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.c_ == b.c_; }

  /// Multiplies by (1 - t^m)^times in place; m >= 1.
  BasicPolynomial& mul_one_minus_tpow(int m, int times = 1) {
    for (int r = 0; r < times; ++r) {
      std::size_t n = c_.size();
      c_.resize(n + static_cast<std::size_t>(m), Coeff(0));
      for (std::size_t i = c_.size(); i-- > static_cast<std::size_t>(m);) c_[i] -= c_[i - static_cast<std::size_t>(m)];
    }
    trim();
    return *this;
  }

  /// Multiplies by t^k, k >= 0.
  BasicPolynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Coeff> r(static_cast<std::size_t>(k), Coeff(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return BasicPolynomial(std::move(r));
  }

  /// Keeps the terms of degree < n.
  BasicPolynomial truncated(int n) const {
    if (n <= 0) return {};
    std::vector<Coeff> r(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(c_.size())));
    return BasicPolynomial(std::move(r));
  }

  BasicPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Coeff(static_cast<long>(i));
    return BasicPolynomial(std::move(r));
  }

  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
    return acc;
  }

  /// p(t) -> t^deg p(1/t).
  BasicPolynomial reversed() const {
    std::vector<Coeff> r(c_.rbegin(), c_.rend());
    return BasicPolynomial(std::move(r));
  }

  /// Coefficients of p(1 - s) as a polynomial in s.
  BasicPolynomial at_one_minus() const {
    // Horner in the variable (1 - s).
    BasicPolynomial acc;
    const BasicPolynomial one_minus_s{Coeff(1), Coeff(-1)};
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * one_minus_s;
      acc += constant(c_[i]);
    }
    return acc;
  }

 private:
  std::vector<Coeff> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

using Polynomial = BasicPolynomial<Rational>;
using IntPolynomial = BasicPolynomial<BigInt>;

/// Exact quotient p / m for monic m, or nullopt when the remainder is nonzero.
template <class Coeff>
std::optional<BasicPolynomial<Coeff>> divide_exact(const BasicPolynomial<Coeff>& p, const BasicPolynomial<Coeff>& m) {
  if (m.is_zero() || m.coefficients().back() != 1) throw std::invalid_argument("divide_exact: divisor must be monic");
  if (p.is_zero()) return BasicPolynomial<Coeff>{};
  int dm = m.degree();
  if (p.degree() < dm) return std::nullopt;
  std::vector<Coeff> rem = p.coefficients();
  std::vector<Coeff> q(static_cast<std::size_t>(p.degree() - dm + 1), Coeff(0));
  const auto& mc = m.coefficients();
  for (int i = p.degree() - dm; i >= 0; --i) {
    Coeff lead = rem[static_cast<std::size_t>(i + dm)];
    if (lead == 0) continue;
    q[static_cast<std::size_t>(i)] = lead;
    for (int j = 0; j <= dm; ++j) rem[static_cast<std::size_t>(i + j)] -= lead * mc[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < dm; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return BasicPolynomial<Coeff>(std::move(q));
}

/// First n coefficients of num/den as a power series. Requires den(0) != 0.
std::vector<Rational> series_quotient(const Polynomial& num, const Polynomial& den, int n);

IntPolynomial to_int_polynomial(const Polynomial& p);  // requires integral coefficients
Polynomial to_polynomial(const IntPolynomial& p);

}  // namespace sl2hilb::exactalg
