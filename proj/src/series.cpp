#include "sl2hilb/series.hpp"

#include <future>
#include <numeric>
#include <stdexcept>

#include "sl2hilb/cyclotomic.hpp"
#include "sl2hilb/oracle.hpp"

namespace sl2hilb::series {

using exactalg::CyclotomicExponents;
using exactalg::FactoredDenominator;

namespace {

// G_j = (1/j) sum_{m=1}^{j} p_m G_{j-m} with p_m = sum_l mu_l q_l^m, which is
// G_0 times the complete homogeneous polynomial h_j(q) (Newton's identities).
template <class T>
std::vector<T> newton_coefficients(const T& g0, const std::vector<T>& q, const std::vector<int>& mu, int count) {
  std::vector<T> g{g0};
  std::vector<T> p;  // p[m-1] = p_m
  std::vector<T> qpow = q;
  for (int j = 1; j < count; ++j) {
    T pj = T{};
    for (std::size_t l = 0; l < q.size(); ++l) {
      T term = qpow[l];
      term *= Rational(mu[l]);
      pj = pj + term;
      qpow[l] = qpow[l] * q[l];
    }
    p.push_back(pj);
    T gj = T{};
    for (int m = 1; m <= j; ++m) gj = gj + p[static_cast<std::size_t>(m - 1)] * g[static_cast<std::size_t>(j - m)];
    gj *= Rational(1, j);
    g.push_back(gj);
  }
  return g;
}

void check_weights(const std::vector<int>& weights, const std::vector<int>& mults) {
  if (weights.size() != mults.size()) throw std::invalid_argument("partial_fraction: weights and multiplicities differ in length");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (mults[i] < 1) throw std::invalid_argument("partial_fraction: multiplicities must be positive");
    for (std::size_t l = i + 1; l < weights.size(); ++l)
      if (weights[i] == weights[l]) throw std::invalid_argument("partial_fraction: weights must be distinct");
  }
}

}  // namespace

std::vector<ZRationalFunction> partial_fraction_coefficients(const std::vector<int>& weights,
                                                             const std::vector<int>& mults, std::size_t i) {
  check_weights(weights, mults);
  // Around t = z^{-w_i}, r_l = z^{c_l} with c_l = w_l - w_i, and each factor
  // (1 - t z^{w_l})^{-mu_l} contributes (1 - r_l)^{-mu_l} (1 - u q_l)^{-mu_l},
  // u = 1 - t z^{w_i}, q_l = r_l / (r_l - 1).
  ZRationalFunction g0 = ZRationalFunction::constant(1);
  std::vector<ZRationalFunction> q;
  std::vector<int> mu;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (l == i) continue;
    int c = weights[l] - weights[i];
    int mul = mults[l];
    if (c > 0) {
      g0 = g0 * ZRationalFunction::inverse_power(c, mul);
      q.push_back(ZRationalFunction::monomial(-1, c) * ZRationalFunction::inverse_power(c, 1));
    } else {
      Rational sign = mul % 2 == 0 ? 1 : -1;
      g0 = g0 * ZRationalFunction::monomial(sign, -c * mul) * ZRationalFunction::inverse_power(-c, mul);
      q.push_back(ZRationalFunction::inverse_power(-c, 1));
    }
    mu.push_back(mul);
  }
  return newton_coefficients(g0, q, mu, mults[i]);
}

std::vector<PartialFractionTerm> partial_fraction(const std::vector<int>& weights, const std::vector<int>& mults) {
  std::vector<PartialFractionTerm> out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    auto g = partial_fraction_coefficients(weights, mults, i);
    for (int j = 0; j < mults[i]; ++j)
      out.push_back({weights[i], mults[i] - j, j, std::move(g[static_cast<std::size_t>(j)])});
  }
  return out;
}

std::vector<Rational> partial_fraction_numeric(const std::vector<Rational>& points, const std::vector<int>& mults,
                                               std::size_t i) {
  if (points.size() != mults.size()) throw std::invalid_argument("partial_fraction_numeric: length mismatch");
  Rational g0 = 1;
  std::vector<Rational> q;
  std::vector<int> mu;
  for (std::size_t l = 0; l < points.size(); ++l) {
    if (l == i) continue;
    Rational r = points[l] / points[i];
    if (r == 1) throw std::invalid_argument("partial_fraction_numeric: points must be distinct");
    g0 /= power(Rational(1 - r), mults[l]);
    q.push_back(r / (r - 1));
    mu.push_back(mults[l]);
  }
  return newton_coefficients(g0, q, mu, mults[i]);
}

RationalFunction ua_transform(const ZRationalFunction& F, int a, std::optional<int> degree_budget) {
  if (a < 0) throw std::invalid_argument("ua_transform: negative section step");
  if (F.is_zero()) return RationalFunction{};
  if (!F.expandable_at_zero()) throw std::domain_error("ua_transform: F has a pole at z = 0");
  if (a == 0)
    return RationalFunction(Polynomial::constant(F.maclaurin(1)[0]), FactoredDenominator(std::map<int, int>{{1, 1}}));
  if (F.has_untracked()) throw std::domain_error("ua_transform: denominator factor not of the form (1 - z^b)");

  // 1/(1 - z^b) = S_b(z) / (1 - t^{b/g}) with S_b a polynomial, g = gcd(a, b),
  // so the section has denominator prod (1 - t^{b/g})^{e_b} and a numerator of
  // degree at most deg(that denominator) + floor(deg F / a).
  std::map<int, int> den;
  for (auto [b, e] : F.tracked()) den[b / std::gcd(a, b)] += e;
  FactoredDenominator T(den);
  int degF = F.degree();
  int floor_div = degF >= 0 ? degF / a : -((-degF + a - 1) / a);
  int bound = T.degree() + floor_div;
  if (degree_budget) bound = *degree_budget;
  if (bound < 0) return RationalFunction{};

  constexpr int kMargin = 2;
  int terms = bound + kMargin + 1;
  std::vector<Rational> z = F.maclaurin(a * (terms - 1) + 1);
  std::vector<Rational> section(static_cast<std::size_t>(terms));
  for (int n = 0; n < terms; ++n) section[static_cast<std::size_t>(n)] = z[static_cast<std::size_t>(n * a)];
  Polynomial num = (Polynomial(std::move(section)) * T.expand()).truncated(terms);
  if (num.degree() > bound)
    throw InternalConsistencyError("ua_transform: numerator exceeds its degree bound");
  return RationalFunction(num, T);
}

RationalFunction dn_apply(const RationalFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("dn_apply: negative order");
  RationalFunction g = f.times_tpow(n);
  for (int k = 0; k < n; ++k) g = g.derivative();
  return g;
}

namespace {

struct ReducedTerm {
  Polynomial num;
  CyclotomicExponents den;
};

ReducedTerm to_cyclotomic(const RationalFunction& f) {
  ReducedTerm r{f.numerator(), exactalg::cyclotomic_exponents(f.denominator())};
  exactalg::cancel_cyclotomic(r.num, r.den);
  return r;
}

// All terms belonging to the weight -a (a >= 0) of multiplicity mu.
std::vector<ReducedTerm> weight_terms(const std::vector<int>& weights, const std::vector<int>& mults, std::size_t i) {
  int a = -weights[i];
  auto g = partial_fraction_coefficients(weights, mults, i);
  std::vector<ReducedTerm> out;
  for (int j = 0; j < mults[i]; ++j) {
    int m = mults[i] - j;
    ZRationalFunction F = g[static_cast<std::size_t>(j)].times_one_minus(2);
    RationalFunction u = ua_transform(F, a);
    if (u.is_zero()) continue;
    RationalFunction term = dn_apply(u, m - 1);
    term *= Rational(1) / Rational(factorial(static_cast<unsigned long>(m - 1)));
    out.push_back(to_cyclotomic(term));
  }
  return out;
}

RationalFunction assemble(const std::vector<ReducedTerm>& terms) {
  CyclotomicExponents lcm;
  for (const auto& t : terms)
    for (auto [d, e] : t.den) lcm[d] = std::max(lcm[d], e);
  Polynomial num;
  for (const auto& t : terms) {
    CyclotomicExponents missing;
    for (auto [d, e] : lcm) {
      auto it = t.den.find(d);
      int have = it == t.den.end() ? 0 : it->second;
      if (e > have) missing[d] = e - have;
    }
    num += t.num * exactalg::expand(missing);
  }
  exactalg::cancel_cyclotomic(num, lcm);
  FactoredDenominator covered = exactalg::cover(lcm);
  return RationalFunction(num * exactalg::cover_cofactor(lcm, covered), covered).reduced();
}

void verify_against_oracle(const repmodel::Representation& rep, const RationalFunction& h, int cap) {
  if (cap < 0) return;
  int n = std::min(h.denominator().degree(), cap);
  std::vector<Rational> got = exactalg::taylor_coeffs(h, n);
  std::vector<BigInt> want = oracle::truncated_series(rep, n);
  for (int k = 0; k <= n; ++k)
    if (got[static_cast<std::size_t>(k)] != Rational(want[static_cast<std::size_t>(k)]))
      throw InternalConsistencyError("hilbert_series(" + rep.key() + "): coefficient of t^" + std::to_string(k) +
                                     " is " + to_string(got[static_cast<std::size_t>(k)]) + " but the oracle counts " +
                                     to_string(want[static_cast<std::size_t>(k)]));
}

}  // namespace

RationalFunction hilbert_series(const repmodel::Representation& rep, const HilbertOptions& options) {
  RationalFunction h;
  if (rep.degrees.empty()) {
    if (rep.trivial_count == 0) throw std::invalid_argument("hilbert_series: empty representation");
    h = RationalFunction::constant(1);
  } else {
    std::vector<int> weights, mults;
    for (auto [w, m] : repmodel::distinct_weights(rep)) {
      weights.push_back(w);
      mults.push_back(m);
    }
    // Only the weights w <= 0 have a nonzero constant-term contribution: for
    // w > 0 the coefficient vanishes to order 2w at z = 0.
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] <= 0) active.push_back(i);

    std::vector<std::vector<ReducedTerm>> parts(active.size());
    unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
      for (std::size_t k = 0; k < active.size(); ++k) parts[k] = weight_terms(weights, mults, active[k]);
    } else {
      std::vector<std::future<void>> jobs;
      for (unsigned w = 0; w < threads; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
          for (std::size_t k = w; k < active.size(); k += threads) parts[k] = weight_terms(weights, mults, active[k]);
        }));
      for (auto& j : jobs) j.get();
    }
    std::vector<ReducedTerm> all;
    for (auto& p : parts)
      for (auto& t : p) all.push_back(std::move(t));
    h = assemble(all);
  }
  if (rep.trivial_count > 0) {
    FactoredDenominator den = h.denominator();
    den.factors[1] += rep.trivial_count;
    h = RationalFunction(h.numerator(), den).reduced();
  }
  verify_against_oracle(rep, h, options.verify_degree);
  return h;
}

}  // namespace sl2hilb::series
