#pragma once

// Schur polynomials s_rho evaluated exactly, for integer vectors rho that need
// not be partitions (Laurent and non-dominant indices are straightened first).

#include <span>
#include <vector>

#include "sl2hilb/number.hpp"

namespace sl2hilb::schur {

/// s_rho = sign * (x_1 ... x_n)^{-shift} * s_partition.
struct StraightenedSchur {
  int sign = 0;                // 0 when s_rho vanishes identically
  std::vector<int> partition;  // weakly decreasing, nonnegative, length n
  int shift = 0;               // >= 0
};

StraightenedSchur straighten(std::span<const int> rho);

/// h_0..h_k at the given points.
std::vector<BigInt> complete_homogeneous_all(std::span<const BigInt> points, int k);
BigInt complete_homogeneous(std::span<const BigInt> points, int k);

/// Fraction-free (Bareiss) determinant; the matrix is consumed.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// s_rho(points) through Jacobi-Trudi. A Laurent index needs nonzero points.
Rational schur_eval(std::span<const int> rho, std::span<const BigInt> points);
Rational schur_eval(std::span<const int> rho, std::span<const Rational> points);

/// det(x_i^{(delta + rho)_j}) / prod_{i<j} (x_i - x_j); an independent route
/// that needs pairwise distinct (and, for Laurent indices, nonzero) points.
Rational bialternant_eval(std::span<const int> rho, std::span<const Rational> points);

/// sum x_i^S with 0^0 = 1.
BigInt power_sum(std::span<const BigInt> points, int S);
Rational power_sum(std::span<const Rational> points, int S);

/// delta = (n-1, ..., 1, 0).
std::vector<int> staircase(int n);

}  // namespace sl2hilb::schur
