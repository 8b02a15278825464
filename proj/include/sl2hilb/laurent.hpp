#pragma once

// Leading Laurent coefficients of Hilb(t) at t = 1,
//   Hilb(t) = gamma0 (1-t)^{3-D} + gamma1 (1-t)^{4-D} + ...,
// in closed form where available and from the exact series otherwise.

#include <array>
#include <string>

#include "sl2hilb/number.hpp"
#include "sl2hilb/repmodel.hpp"
#include "sl2hilb/series.hpp"
#include "sl2hilb/sigma_sums.hpp"

namespace sl2hilb::laurent {

class ExceptionalCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Method { ClosedForm, SeriesFallback };
std::string to_string(Method m);

struct GammaResult {
  std::array<Rational, 4> gamma;
  std::array<Method, 4> method{};
  long a_invariant = 0;
  Method a_method = Method::ClosedForm;
  int pole_order = 0;  // order of the pole at t = 1 that gamma0 belongs to
  repmodel::CaseTag tag;
};

/// sigma s_rho(a) / s_delta(a), rho = (C-3, C-3, C-3, C-4, ..., 1, 0).
/// Throws ExceptionalCase for V1, V2, V3, V4, 2V1.
Rational gamma0(const repmodel::Representation& rep);
/// 3 gamma0 / 2; also throws ExceptionalCase for V1 + V2.
Rational gamma1(const repmodel::Representation& rep);
/// Throws ExceptionalCase outside the families covered by the closed form.
Rational gamma2(const repmodel::Representation& rep);
/// 5 (gamma2 - gamma0) / 2, with gamma2 from the series when needed.
Rational gamma3(const repmodel::Representation& rep);

/// -D, or deg N - deg Q of the series for V1, 2V1, V2, V3, V4.
long a_invariant(const repmodel::Representation& rep);

/// All four coefficients, each by closed form when it applies.
GammaResult gammas(const repmodel::Representation& rep, const series::HilbertOptions& options = {});

/// gamma0(V_d) from the classical single-binary-form formula, d >= 5.
Rational hilbert1893_gamma0(int d);

/// The closed-form expressions evaluated at perturbed parameters b instead of
/// the weights. Identically equal to gamma_raw for order m in 0..2 once
/// D >= 4 + m and C >= 2 (m = 0) or C >= 3 (m > 0).
Rational gamma_schur(int order, const repmodel::WeightSystem& ws, const PerturbedParams& p, repmodel::GammaCase gcase);

/// The limit b -> a of sum_K 2 b_K^{D-3} / prod_{theta \ K} (b_K - b_k).
Rational first_coeff_sum(const repmodel::Representation& rep);

}  // namespace sl2hilb::laurent
