#pragma once

#include <map>

#include "sl2hilb/rational_function.hpp"

namespace sl2hilb::exactalg {

/// m -> exponent of the cyclotomic polynomial Phi_m.
using CyclotomicExponents = std::map<int, int>;

/// Phi_m for m >= 2 and 1 - t for m = 1, so that 1 - t^m = prod_{d | m} of
/// these with no sign. Cached; thread safe.
const Polynomial& cyclotomic(int m);

CyclotomicExponents cyclotomic_exponents(const FactoredDenominator& den);

Polynomial expand(const CyclotomicExponents& ex);

/// Divides num by Phi_m while possible, lowering den. Returns the number of
/// factors removed.
int cancel_cyclotomic(Polynomial& num, CyclotomicExponents& den);

/// Smallest-looking product of (1 - t^m) factors divisible by prod Phi_d^{need_d}:
/// repeatedly takes the largest d still needed and covers all its divisors.
FactoredDenominator cover(const CyclotomicExponents& need);

/// prod Phi_d^{(cover exponent) - need_d}: multiplying a fraction over the
/// cyclotomic denominator by this puts it over the cover.
Polynomial cover_cofactor(const CyclotomicExponents& need, const FactoredDenominator& covered);

}  // namespace sl2hilb::exactalg
