#pragma once

// Exact univariate Hilbert series of C[V]^{SL2} from the torus-weight
// integral, via partial fractions in t and residue extraction in z.

#include <optional>
#include <vector>

#include "sl2hilb/rational_function.hpp"
#include "sl2hilb/repmodel.hpp"
#include "sl2hilb/zrational.hpp"

namespace sl2hilb::series {

using exactalg::RationalFunction;

/// One summand G(z) / (1 - t z^weight)^order of the partial fraction
/// decomposition of prod_l (1 - t z^{w_l})^{-mu_l} in t.
struct PartialFractionTerm {
  int weight = 0;
  int order = 0;  // mu - j
  int j = 0;
  ZRationalFunction coefficient;
};

/// The coefficients G_{i,j} for every distinct weight. Weights must be distinct;
/// multiplicities positive.
std::vector<PartialFractionTerm> partial_fraction(const std::vector<int>& weights, const std::vector<int>& mults);

/// G_{i,0..mu_i-1} for the single weight weights[i].
std::vector<ZRationalFunction> partial_fraction_coefficients(const std::vector<int>& weights,
                                                             const std::vector<int>& mults, std::size_t i);

/// The same recurrence at numeric points x_l in place of z^{w_l}.
std::vector<Rational> partial_fraction_numeric(const std::vector<Rational>& points, const std::vector<int>& mults,
                                               std::size_t i);

/// The operator keeping the terms of F(z) whose exponent is a multiple of a,
/// with z^a renamed t. a = 0 gives F(0)/(1 - t). The numerator is truncated
/// at degree_budget (default: a bound that is always sufficient).
RationalFunction ua_transform(const ZRationalFunction& F, int a, std::optional<int> degree_budget = std::nullopt);

/// d^n/dt^n (t^n f), exactly.
RationalFunction dn_apply(const RationalFunction& f, int n);

struct HilbertOptions {
  int verify_degree = 30;  // cap on the oracle comparison; negative disables it
  unsigned threads = 1;    // terms are distributed over this many threads
};

/// Hilb(t) of C[V]^{SL2}, reduced, with the denominator written as a product
/// of (1 - t^m) factors. Throws InternalConsistencyError if the result
/// disagrees with the weight-counting oracle.
RationalFunction hilbert_series(const repmodel::Representation& rep, const HilbertOptions& options = {});

}  // namespace sl2hilb::series
