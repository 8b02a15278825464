#include "sl2hilb/sigma_sums.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sl2hilb/schur.hpp"

namespace sl2hilb::laurent {

using repmodel::WeightSystem;

PerturbedParams PerturbedParams::from_lambda(const WeightSystem& ws, const std::vector<Rational>& lambda_values) {
  if (lambda_values.size() != ws.lambda.size()) throw std::invalid_argument("from_lambda: one value per lambda entry");
  PerturbedParams p;
  p.b.assign(ws.theta.size(), Rational(0));
  for (std::size_t j = 0; j < ws.lambda.size(); ++j) {
    const auto& w = ws.lambda[j];
    int d = ws.theta[ws.theta_position(w.summand, 0)].weight * -1;
    p.b[ws.theta_position(w.summand, w.index)] = lambda_values[j];
    p.b[ws.theta_position(w.summand, d - w.index)] = -lambda_values[j];
  }
  return p;
}

PerturbedParams PerturbedParams::random(const WeightSystem& ws, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 12);
  std::set<Rational> used;
  std::vector<Rational> vals;
  while (vals.size() < ws.lambda.size()) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (used.insert(r).second) vals.push_back(r);
  }
  return from_lambda(ws, vals);
}

std::vector<Rational> PerturbedParams::lambda_values(const WeightSystem& ws) const {
  std::vector<Rational> out;
  for (const auto& w : ws.lambda) out.push_back(b[ws.theta_position(w.summand, w.index)]);
  return out;
}

bool PerturbedParams::lambda_distinct(const WeightSystem& ws) const {
  auto v = lambda_values(ws);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

void PerturbedParams::validate(const WeightSystem& ws) const {
  if (b.size() != ws.theta.size()) throw std::invalid_argument("PerturbedParams: wrong length");
  for (std::size_t p = 0; p < ws.theta.size(); ++p) {
    const auto& w = ws.theta[p];
    if (w.weight == 0 && b[p] != 0) throw std::invalid_argument("PerturbedParams: nonzero value on a zero weight");
    int d = -ws.theta[ws.theta_position(w.summand, 0)].weight;
    if (b[ws.theta_position(w.summand, d - w.index)] != -b[p])
      throw std::invalid_argument("PerturbedParams: antisymmetry violated");
  }
}

namespace {

// b^e with 0^0 = 1; negative exponents need b != 0.
Rational pw(const Rational& b, int e) { return e == 0 ? Rational(1) : power(b, e); }

struct RawContext {
  const WeightSystem& ws;
  const PerturbedParams& p;
  std::vector<std::size_t> lambda_pos;

  RawContext(const WeightSystem& w, const PerturbedParams& pp) : ws(w), p(pp) {
    pp.validate(w);
    if (!pp.lambda_distinct(w)) throw std::invalid_argument("perturbed parameters repeat on lambda");
    for (const auto& x : w.lambda) lambda_pos.push_back(w.theta_position(x.summand, x.index));
  }

  // prod over theta minus the excluded positions of (b_K - b_k).
  Rational vandermonde_row(std::size_t K, std::initializer_list<std::size_t> excluded = {}) const {
    Rational prod = 1;
    for (std::size_t k = 0; k < p.b.size(); ++k) {
      if (k == K || std::find(excluded.begin(), excluded.end(), k) != excluded.end()) continue;
      prod *= p.b[K] - p.b[k];
    }
    if (prod == 0) throw std::invalid_argument("perturbed parameters give a vanishing denominator");
    return prod;
  }
};

void require_nonnegative(SigmaArity which, SigmaExponents x) {
  int n = static_cast<int>(which);
  if ((n >= 2 && x.S < 0) || (n >= 3 && x.T < 0) || (n >= 4 && x.U < 0))
    throw std::invalid_argument("sigma sums need S, T, U >= 0");
}

}  // namespace

Rational sigma_sum_raw(SigmaArity which, SigmaExponents x, const WeightSystem& ws, const PerturbedParams& p) {
  require_nonnegative(which, x);
  RawContext ctx(ws, p);
  const auto& b = p.b;
  const std::size_t D = b.size();
  Rational total = 0;
  for (std::size_t K : ctx.lambda_pos) {
    Rational inner = 0;
    switch (which) {
      case SigmaArity::R:
        inner = 1;
        break;
      case SigmaArity::RS:
        for (std::size_t k1 = 0; k1 < D; ++k1)
          if (k1 != K) inner += pw(b[k1], x.S);
        break;
      case SigmaArity::RST:
        for (std::size_t k1 = 0; k1 < D; ++k1) {
          if (k1 == K) continue;
          for (std::size_t k2 = 0; k2 < D; ++k2)
            if (k2 != K && k2 != k1) inner += pw(b[k1], x.S) * pw(b[k2], x.T);
        }
        break;
      case SigmaArity::RSTU:
        for (std::size_t k1 = 0; k1 < D; ++k1) {
          if (k1 == K) continue;
          for (std::size_t k2 = 0; k2 < D; ++k2) {
            if (k2 == K || k2 == k1) continue;
            Rational st = pw(b[k1], x.S) * pw(b[k2], x.T);
            for (std::size_t k3 = 0; k3 < D; ++k3)
              if (k3 != K && k3 != k1 && k3 != k2) inner += st * pw(b[k3], x.U);
          }
        }
        break;
    }
    total += pw(b[K], x.R) * inner / ctx.vandermonde_row(K);
  }
  return total;
}

Rational sigma_sum_schur(SigmaArity which, SigmaExponents x, const WeightSystem& ws, const PerturbedParams& p) {
  require_nonnegative(which, x);
  p.validate(ws);
  if (!p.lambda_distinct(ws)) throw std::invalid_argument("perturbed parameters repeat on lambda");
  const int C = ws.C, e = ws.e;
  const std::vector<Rational> pts = p.lambda_values(ws);
  auto P = [&](int s) { return schur::power_sum(std::span<const Rational>(p.b), s); };
  auto s = [&](int M) {
    std::vector<int> rho = schur::staircase(C);
    if (C > 0) rho[0] = M;
    return schur::schur_eval(rho, std::span<const Rational>(pts));
  };
  const int base = -e - C;
  const int R = x.R, S = x.S, T = x.T, U = x.U;
  Rational num;
  switch (which) {
    case SigmaArity::R:
      num = s(R + base);
      break;
    case SigmaArity::RS:
      num = P(S) * s(R + base) - s(R + S + base);
      break;
    case SigmaArity::RST:
      num = (P(S) * P(T) - P(S + T)) * s(R + base) - P(T) * s(R + S + base) - P(S) * s(R + T + base) +
            2 * s(R + S + T + base);
      break;
    case SigmaArity::RSTU:
      num = (2 * P(S + T + U) - P(S) * P(T + U) - P(T) * P(S + U) - P(U) * P(S + T) + P(S) * P(T) * P(U)) *
                s(R + base) +
            (P(T + U) - P(T) * P(U)) * s(R + S + base) + (P(S + U) - P(S) * P(U)) * s(R + T + base) +
            (P(S + T) - P(S) * P(T)) * s(R + U + base) + 2 * P(U) * s(R + S + T + base) +
            2 * P(T) * s(R + S + U + base) + 2 * P(S) * s(R + T + U + base) - 6 * s(R + S + T + U + base);
      break;
  }
  Rational sdelta = schur::schur_eval(schur::staircase(C), std::span<const Rational>(pts));
  return num / (2 * sdelta);
}

namespace {

// General-case expressions, written out term by term: for each K in lambda a
// polynomial in b_K and nested sums over distinct remaining coordinates,
// over prod_{theta \ K} (b_K - b_k).
Rational raw_general(int order, const RawContext& ctx) {
  const auto& b = ctx.p.b;
  const std::size_t n = b.size();
  const int D = static_cast<int>(n);
  Rational total = 0;
  for (std::size_t K : ctx.lambda_pos) {
    const Rational& x = b[K];
    Rational bracket;
    if (order == 0) {
      // b^{D-3} - 2 b^{D-4} - sum_k b^{D-4} b_k
      Rational s1 = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != K) s1 += b[k];
      bracket = pw(x, D - 3) - 2 * pw(x, D - 4) - pw(x, D - 4) * s1;
    } else if (order == 1) {
      // b^{D-5} (2/3 (b^2 - 3b + 2) + sum_k b_k/6 (b_k - 5b + 6 + 3 sum_{k'} b_{k'}))
      Rational acc = Rational(2, 3) * (x * x - 3 * x + 2);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == K) continue;
        Rational s2 = 0;
        for (std::size_t k2 = 0; k2 < n; ++k2)
          if (k2 != K && k2 != k) s2 += b[k2];
        acc += b[k] / 6 * (b[k] - 5 * x + 6 + 3 * s2);
      }
      bracket = pw(x, D - 5) * acc;
    } else {
      // b^{D-6}/24 (12b^3 - 44b^2 + 48b - 16 + sum_k b_k (-16b^2 + 32b - 16 - 4b_k + 4b b_k
      //   + sum_{k'} b_{k'} (7b - 6 - 2b_k - sum_{k''} b_{k''})))
      Rational acc = 12 * x * x * x - 44 * x * x + 48 * x - 16;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == K) continue;
        Rational mid = -16 * x * x + 32 * x - 16 - 4 * b[k] + 4 * x * b[k];
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          if (k2 == K || k2 == k) continue;
          Rational s3 = 0;
          for (std::size_t k3 = 0; k3 < n; ++k3)
            if (k3 != K && k3 != k && k3 != k2) s3 += b[k3];
          mid += b[k2] * (7 * x - 6 - 2 * b[k] - s3);
        }
        acc += b[k] * mid;
      }
      bracket = pw(x, D - 6) * acc / 24;
    }
    total += bracket / ctx.vandermonde_row(K);
  }
  return total;
}

// The extra sum over K in lambda minus the V1 coordinates, with (1,0) and
// (1,1) also left out of the product.
Rational raw_v1_extra(int order, const RawContext& ctx) {
  const auto& ws = ctx.ws;
  const auto& b = ctx.p.b;
  const int D = static_cast<int>(b.size());
  std::size_t p10 = ws.theta_position(0, 0), p11 = ws.theta_position(0, 1);
  Rational total = 0;
  for (std::size_t K : ctx.lambda_pos) {
    if (K == p11) continue;
    const Rational& x = b[K];
    Rational denom = ctx.vandermonde_row(K, {p10, p11});
    if (order == 1) {
      total += pw(x, D - 5) / (2 * denom);
    } else {
      Rational rest = 0;
      for (std::size_t k = 0; k < b.size(); ++k)
        if (k != K && k != p10 && k != p11) rest += b[k];
      total += pw(x, D - 6) * (3 * x - b[p10] - b[p11] - 2 - rest) / (4 * denom);
    }
  }
  return total;
}

}  // namespace

Rational gamma_raw(int order, const WeightSystem& ws, const PerturbedParams& p, repmodel::GammaCase gcase) {
  if (order < 0 || order > 2) throw std::invalid_argument("gamma_raw: order must be 0, 1 or 2");
  RawContext ctx(ws, p);
  Rational value = ws.sigma * raw_general(order, ctx);
  if (gcase == repmodel::GammaCase::OneV1RestEven && order > 0) {
    if (ws.theta.size() < 2 || ws.theta[1].summand != 0 || ws.theta[1].weight != 1)
      throw std::invalid_argument("gamma_raw: OneV1RestEven needs d_1 = 1");
    value += raw_v1_extra(order, ctx);
  }
  return value;
}

}  // namespace sl2hilb::laurent
