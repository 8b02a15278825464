#pragma once

// Rational functions N(t) / prod_m (1 - t^m)^{e_m} with exact coefficients.

#include <map>
#include <vector>

#include "sl2hilb/polynomial.hpp"

namespace sl2hilb::exactalg {

/// prod_m (1 - t^m)^{e_m}; every stored exponent is positive.
struct FactoredDenominator {
  std::map<int, int> factors;

  FactoredDenominator() = default;
  explicit FactoredDenominator(std::map<int, int> f);

  Polynomial expand() const;
  int degree() const;          // sum m e_m
  int total_exponent() const;  // sum e_m, the pole order at t = 1 before cancellation
  bool empty() const { return factors.empty(); }

  FactoredDenominator& operator*=(const FactoredDenominator& o);
  friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;
};

class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial numerator, FactoredDenominator denominator);
  static RationalFunction constant(const Rational& c);

  const Polynomial& numerator() const { return num_; }
  const FactoredDenominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True once reduce() has removed every cyclotomic factor shared with the numerator.
  bool is_reduced() const { return reduced_; }

  /// deg N - deg Q. Throws std::domain_error for the zero function.
  int degree() const;

  /// Cancels common cyclotomic factors and rewrites the denominator as a
  /// product of (1 - t^m) factors with small total degree.
  RationalFunction reduced() const;

  RationalFunction& operator*=(const Rational& s);
  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f);

  /// Multiplies the numerator by t^k, k >= 0.
  RationalFunction times_tpow(int k) const;
  /// d/dt, computed exactly; each denominator exponent grows by one.
  RationalFunction derivative() const;

 private:
  Polynomial num_;
  FactoredDenominator den_;
  bool reduced_ = false;
};

/// Equality as rational functions, by cross-multiplication.
bool rf_equal(const RationalFunction& f, const RationalFunction& g);

/// Taylor coefficients c_0..c_N at t = 0.
std::vector<Rational> taylor_coeffs(const RationalFunction& f, int N);

struct LaurentExpansion {
  int pole_order = 0;            // p with f = sum_j coeffs[j] (1-t)^{j-p}
  std::vector<Rational> coeffs;  // coeffs[0] is the leading coefficient
};

/// First k coefficients of the expansion in powers of (1 - t).
/// Throws std::domain_error for the zero function.
LaurentExpansion laurent_at_one(const RationalFunction& f, int k);

/// True when f(1/t) = sign * t^shift * f(t) as rational functions.
bool satisfies_functional_equation(const RationalFunction& f, int sign, int shift);

}  // namespace sl2hilb::exactalg
