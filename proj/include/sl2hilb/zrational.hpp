#pragma once

// Rational functions in z of the form
//   z^low * N(z) / (prod_b (1 - z^b)^{e_b} * U(z)),
// where U is an optional "untracked" polynomial factor.

#include <map>
#include <vector>

#include "sl2hilb/polynomial.hpp"

namespace sl2hilb::series {

using exactalg::Polynomial;

class ZRationalFunction {
 public:
  ZRationalFunction() = default;  // zero
  ZRationalFunction(Polynomial numerator, int low, std::map<int, int> tracked, Polynomial untracked);

  static ZRationalFunction constant(const Rational& c);
  static ZRationalFunction monomial(const Rational& c, int k);
  /// (1 - z^b)^{-e}, b >= 1.
  static ZRationalFunction inverse_power(int b, int e);

  const Polynomial& numerator() const { return num_; }
  int low() const { return low_; }
  const std::map<int, int>& tracked() const { return tracked_; }
  const Polynomial& untracked() const { return untracked_; }
  bool is_zero() const { return num_.is_zero(); }
  bool has_untracked() const { return untracked_.degree() > 0; }

  /// Degree at infinity: low + deg N - sum b e_b - deg U.
  int degree() const;
  /// No pole at z = 0.
  bool expandable_at_zero() const;

  ZRationalFunction& operator*=(const Rational& s);
  ZRationalFunction& operator/=(long s);
  friend ZRationalFunction operator+(const ZRationalFunction& f, const ZRationalFunction& g);
  friend ZRationalFunction operator*(const ZRationalFunction& f, const ZRationalFunction& g);

  /// Multiplies by (1 - z^b), cancelling a tracked factor when one is present.
  ZRationalFunction times_one_minus(int b) const;
  /// z -> z^c for c >= 1.
  ZRationalFunction substitute_power(int c) const;
  ZRationalFunction derivative() const;

  /// Value at a point z that is not a pole.
  Rational eval(const Rational& z) const;

  /// Coefficients of z^0..z^{n-1}. Throws std::domain_error when not expandable.
  std::vector<Rational> maclaurin(int n) const;

 private:
  Polynomial num_;
  int low_ = 0;
  std::map<int, int> tracked_;
  Polynomial untracked_ = Polynomial::constant(1);

  void normalize();
};

}  // namespace sl2hilb::series
