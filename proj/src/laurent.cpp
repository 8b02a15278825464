#include "sl2hilb/laurent.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "sl2hilb/schur.hpp"

namespace sl2hilb::laurent {

using repmodel::GammaCase;
using repmodel::Representation;

std::string to_string(Method m) { return m == Method::ClosedForm ? "ClosedForm" : "SeriesFallback"; }

namespace {

void require_no_trivial(const Representation& rep) {
  if (rep.has_trivial()) throw std::invalid_argument("Laurent coefficients need a representation without trivial summands");
}

// Representations whose a-invariant is not -D.
bool small_a_invariant_exception(const Representation& rep) {
  static const std::vector<std::vector<int>> list = {{1}, {1, 1}, {2}, {3}, {4}};
  return std::find(list.begin(), list.end(), rep.degrees) != list.end();
}

// V1 + V2 is set aside for gamma1: its terms have too few factors.
bool gamma1_exception(const Representation& rep) { return rep.degrees == std::vector<int>{1, 2}; }

// (n-3, n-3, n-3, n-4, ..., 1, 0).
std::vector<int> rho_gamma0(int n) {
  std::vector<int> r = schur::staircase(n);
  for (int j = 0; j < n && j < 2; ++j) r[static_cast<std::size_t>(j)] = n - 3;
  return r;
}

// (n-3, n-4, n-4, n-4, n-5, ..., 1, 0).
std::vector<int> rho_gamma2(int n) {
  std::vector<int> r = schur::staircase(n);
  if (n > 0) r[0] = n - 3;
  for (int j = 1; j < n && j < 3; ++j) r[static_cast<std::size_t>(j)] = n - 4;
  return r;
}

Rational schur_ratio(const std::vector<int>& rho, std::span<const Rational> pts) {
  return schur::schur_eval(rho, pts) / schur::schur_eval(schur::staircase(static_cast<int>(pts.size())), pts);
}

// The closed forms at points x on lambda; p2 is the degree-2 power sum over
// all of theta (twice the sum over lambda under antisymmetry).
Rational closed_form(int order, int sigma, std::span<const Rational> x, const Rational& p2, bool v1_case) {
  const int C = static_cast<int>(x.size());
  Rational g0 = sigma * schur_ratio(rho_gamma0(C), x);
  if (order == 0) return g0;
  if (order == 1) return Rational(3, 2) * g0;
  Rational s_delta = schur::schur_eval(schur::staircase(C), x);
  Rational value = sigma * (42 * schur::schur_eval(rho_gamma0(C), x) + schur::schur_eval(rho_gamma2(C), x) * (p2 - 8)) /
                   (24 * s_delta);
  if (v1_case) value += schur_ratio(rho_gamma0(C - 1), x.subspan(1)) / 4;
  return value;
}

std::vector<Rational> weights_as_points(const repmodel::WeightSystem& ws) {
  return std::vector<Rational>(ws.a.begin(), ws.a.end());
}

Rational theta_p2(const std::vector<Rational>& lambda_pts) {
  Rational p2 = 0;
  for (const Rational& v : lambda_pts) p2 += 2 * v * v;
  return p2;
}

struct SeriesData {
  exactalg::LaurentExpansion laurent;
  long degree = 0;
};

SeriesData series_data(const Representation& rep, const series::HilbertOptions& options) {
  exactalg::RationalFunction h = series::hilbert_series(rep, options);
  return SeriesData{exactalg::laurent_at_one(h, 4), h.degree()};
}

}  // namespace

Rational gamma0(const Representation& rep) {
  require_no_trivial(rep);
  if (repmodel::classify_case(rep).gamma0_exception)
    throw ExceptionalCase("gamma0 closed form does not apply to " + rep.key());
  repmodel::WeightSystem ws = repmodel::weight_system(rep);
  return closed_form(0, ws.sigma, weights_as_points(ws), 0, false);
}

Rational gamma1(const Representation& rep) {
  if (gamma1_exception(rep)) throw ExceptionalCase("gamma1 closed form does not apply to " + rep.key());
  return Rational(3, 2) * gamma0(rep);
}

Rational gamma2(const Representation& rep) {
  require_no_trivial(rep);
  repmodel::CaseTag tag = repmodel::classify_case(rep);
  if (tag.gamma2_exception) throw ExceptionalCase("gamma2 closed form does not apply to " + rep.key());
  repmodel::WeightSystem ws = repmodel::weight_system(rep);
  std::vector<Rational> pts = weights_as_points(ws);
  return closed_form(2, ws.sigma, pts, theta_p2(pts), tag.primary == GammaCase::OneV1RestEven);
}

Rational gamma3(const Representation& rep) {
  require_no_trivial(rep);
  repmodel::CaseTag tag = repmodel::classify_case(rep);
  if (tag.gamma0_exception) throw ExceptionalCase("gamma3 closed form does not apply to " + rep.key());
  Rational g2 = tag.gamma2_exception ? series_data(rep, {}).laurent.coeffs[2] : gamma2(rep);
  return Rational(5, 2) * (g2 - gamma0(rep));
}

long a_invariant(const Representation& rep) {
  require_no_trivial(rep);
  if (small_a_invariant_exception(rep)) return series_data(rep, {}).degree;
  return -rep.dimension();
}

GammaResult gammas(const Representation& rep, const series::HilbertOptions& options) {
  require_no_trivial(rep);
  GammaResult r;
  r.tag = repmodel::classify_case(rep);
  const int D = rep.dimension();
  r.pole_order = D - 3;

  std::optional<SeriesData> data;
  auto from_series = [&]() -> const SeriesData& {
    if (!data) data = series_data(rep, options);
    return *data;
  };

  if (r.tag.gamma0_exception) {
    const SeriesData& s = from_series();
    for (int m = 0; m < 4; ++m) {
      r.gamma[static_cast<std::size_t>(m)] = s.laurent.coeffs[static_cast<std::size_t>(m)];
      r.method[static_cast<std::size_t>(m)] = Method::SeriesFallback;
    }
    r.pole_order = s.laurent.pole_order;
  } else {
    r.gamma[0] = gamma0(rep);
    r.gamma[1] = Rational(3, 2) * r.gamma[0];
    r.method[0] = r.method[1] = Method::ClosedForm;
    if (gamma1_exception(rep)) {
      r.gamma[1] = from_series().laurent.coeffs[1];
      r.method[1] = Method::SeriesFallback;
    }
    if (r.tag.gamma2_exception) {
      const SeriesData& s = from_series();
      if (s.laurent.pole_order != D - 3 || s.laurent.coeffs[0] != r.gamma[0])
        throw InternalConsistencyError("series and closed form disagree on gamma0 for " + rep.key());
      r.gamma[2] = s.laurent.coeffs[2];
      r.method[2] = Method::SeriesFallback;
    } else {
      r.gamma[2] = gamma2(rep);
      r.method[2] = Method::ClosedForm;
    }
    r.gamma[3] = Rational(5, 2) * (r.gamma[2] - r.gamma[0]);
    r.method[3] = Method::ClosedForm;
  }

  if (small_a_invariant_exception(rep)) {
    r.a_invariant = from_series().degree;
    r.a_method = Method::SeriesFallback;
  } else {
    r.a_invariant = -D;
    r.a_method = Method::ClosedForm;
  }
  return r;
}

Rational hilbert1893_gamma0(int d) {
  if (d < 5) throw std::invalid_argument("hilbert1893_gamma0 needs d >= 5");
  Rational sum = 0;
  for (int n = 0; n <= d / 2; ++n) {
    Rational base(d - 2 * n, 2);
    base.canonicalize();
    Rational term = Rational(binomial(d, n)) * power(base, d - 3);
    sum += n % 2 == 0 ? term : Rational(-term);
  }
  int sign_d = d % 2 == 0 ? 1 : -1;
  return -sum / (Rational(3 - sign_d) * Rational(factorial(static_cast<unsigned long>(d))));
}

Rational first_coeff_sum(const Representation& rep) {
  require_no_trivial(rep);
  repmodel::WeightSystem ws = repmodel::weight_system(rep);
  // 2 Sigma_{D-3} = s_{C-3} / s_delta, a ratio that is continuous at b = a.
  std::vector<int> rho = schur::staircase(ws.C);
  rho[0] = ws.C - 3;
  return schur_ratio(rho, weights_as_points(ws));
}

Rational gamma_schur(int order, const repmodel::WeightSystem& ws, const PerturbedParams& p, GammaCase gcase) {
  if (order < 0 || order > 2) throw std::invalid_argument("gamma_schur: order must be 0, 1 or 2");
  p.validate(ws);
  bool v1_case = gcase == GammaCase::OneV1RestEven;
  if (v1_case && (ws.theta.size() < 2 || ws.theta[1].summand != 0 || ws.theta[1].weight != 1))
    throw std::invalid_argument("gamma_schur: OneV1RestEven needs d_1 = 1");
  std::vector<Rational> pts = p.lambda_values(ws);
  Rational p2 = schur::power_sum(std::span<const Rational>(p.b), 2);
  return closed_form(order, ws.sigma, pts, p2, v1_case);
}

}  // namespace sl2hilb::laurent
