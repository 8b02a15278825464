#pragma once

// Perturbed-weight sums and their Schur-polynomial closed forms. These are
// the ingredients the closed-form Laurent coefficients are built from; here
// they are exposed for identity testing at generic rational parameters.

#include <random>
#include <vector>

#include "sl2hilb/number.hpp"
#include "sl2hilb/repmodel.hpp"

namespace sl2hilb::laurent {

/// Values b_{k,i} aligned with WeightSystem::theta, with b = 0 on zero
/// weights and b_{k, d_k - i} = -b_{k,i}.
struct PerturbedParams {
  std::vector<Rational> b;

  /// Extends values given on lambda (in lambda order) to all of theta.
  static PerturbedParams from_lambda(const repmodel::WeightSystem& ws, const std::vector<Rational>& lambda_values);
  /// Distinct positive rationals with small numerators and denominators on lambda.
  static PerturbedParams random(const repmodel::WeightSystem& ws, std::mt19937_64& rng);

  std::vector<Rational> lambda_values(const repmodel::WeightSystem& ws) const;
  bool lambda_distinct(const repmodel::WeightSystem& ws) const;
  /// Throws std::invalid_argument if the zero or antisymmetry constraints fail.
  void validate(const repmodel::WeightSystem& ws) const;
};

enum class SigmaArity { R = 1, RS = 2, RST = 3, RSTU = 4 };

struct SigmaExponents {
  int R = 0, S = 0, T = 0, U = 0;
};

/// The nested sum over K in lambda and distinct further indices of theta,
/// divided by prod_{theta \ K} (b_K - b_k), evaluated term by term.
Rational sigma_sum_raw(SigmaArity which, SigmaExponents x, const repmodel::WeightSystem& ws,
                       const PerturbedParams& p);

/// The same quantity via power sums over theta and Schur polynomials
/// s_M = s_{(M, C-2, ..., 1, 0)} in the lambda parameters.
Rational sigma_sum_schur(SigmaArity which, SigmaExponents x, const repmodel::WeightSystem& ws,
                         const PerturbedParams& p);

/// The perturbed expression for the order-th coefficient (0, 1 or 2), before
/// the limit b -> a. gcase selects the formula for the OneV1RestEven family;
/// every other value uses the general one.
Rational gamma_raw(int order, const repmodel::WeightSystem& ws, const PerturbedParams& p, repmodel::GammaCase gcase);

}  // namespace sl2hilb::laurent
