#include "sl2hilb/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sl2hilb::schur {

std::vector<int> staircase(int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = n - 1 - j;
  return d;
}

StraightenedSchur straighten(std::span<const int> rho) {
  const int n = static_cast<int>(rho.size());
  std::vector<int> v(rho.begin(), rho.end());
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] += n - 1 - j;

  // Insertion sort into decreasing order, counting transpositions.
  int swaps = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i; j > 0 && v[static_cast<std::size_t>(j - 1)] < v[static_cast<std::size_t>(j)]; --j) {
      std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j)]);
      ++swaps;
    }
  StraightenedSchur out;
  for (int j = 1; j < n; ++j)
    if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j - 1)]) return out;

  out.sign = swaps % 2 == 0 ? 1 : -1;
  out.partition.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.partition[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] - (n - 1 - j);
  if (n > 0 && out.partition.back() < 0) {
    out.shift = -out.partition.back();
    for (int& p : out.partition) p += out.shift;
  }
  return out;
}

std::vector<BigInt> complete_homogeneous_all(std::span<const BigInt> points, int k) {
  std::vector<BigInt> h(static_cast<std::size_t>(std::max(k, 0)) + 1, 0);
  h[0] = 1;
  // Coefficients of prod_i 1 / (1 - x_i u), one variable at a time.
  for (const BigInt& x : points)
    for (int j = 1; j <= k; ++j) h[static_cast<std::size_t>(j)] += x * h[static_cast<std::size_t>(j - 1)];
  return h;
}

BigInt complete_homogeneous(std::span<const BigInt> points, int k) {
  if (k < 0) return 0;
  return complete_homogeneous_all(points, k)[static_cast<std::size_t>(k)];
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  return sign > 0 ? det : BigInt(-det);
}

namespace {

// s_lambda for a genuine partition at integer points, via det(h_{lambda_i - i + j}).
BigInt jacobi_trudi(const std::vector<int>& lambda, std::span<const BigInt> points) {
  std::size_t len = 0;
  while (len < lambda.size() && lambda[len] > 0) ++len;
  if (len == 0) return 1;
  int top = lambda[0] + static_cast<int>(len);
  std::vector<BigInt> h = complete_homogeneous_all(points, top);
  std::vector<std::vector<BigInt>> m(len, std::vector<BigInt>(len));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) {
      int idx = lambda[i] - static_cast<int>(i) + static_cast<int>(j);
      m[i][j] = idx < 0 ? BigInt(0) : h[static_cast<std::size_t>(idx)];
    }
  return bareiss_determinant(std::move(m));
}

}  // namespace

Rational schur_eval(std::span<const int> rho, std::span<const BigInt> points) {
  if (rho.size() != points.size()) throw std::invalid_argument("schur_eval: index and point counts differ");
  StraightenedSchur st = straighten(rho);
  if (st.sign == 0) return 0;
  Rational value(jacobi_trudi(st.partition, points));
  if (st.shift > 0) {
    BigInt prod = 1;
    for (const BigInt& x : points) prod *= x;
    if (prod == 0) throw std::domain_error("schur_eval: Laurent index at a zero point");
    value /= power(Rational(prod), st.shift);
  }
  return st.sign > 0 ? value : Rational(-value);
}

Rational schur_eval(std::span<const int> rho, std::span<const Rational> points) {
  // s_lambda(x / q) = q^{-|lambda|} s_lambda(x) for homogeneous s_lambda.
  BigInt q = 1;
  for (const Rational& x : points) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> scaled;
  scaled.reserve(points.size());
  for (const Rational& x : points) scaled.push_back(x.get_num() * (q / x.get_den()));
  long degree = std::accumulate(rho.begin(), rho.end(), 0L);
  return schur_eval(rho, std::span<const BigInt>(scaled)) / power(Rational(q), degree);
}

Rational bialternant_eval(std::span<const int> rho, std::span<const Rational> points) {
  const std::size_t n = points.size();
  if (rho.size() != n) throw std::invalid_argument("bialternant_eval: index and point counts differ");
  Rational vandermonde = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) vandermonde *= points[i] - points[j];
  if (vandermonde == 0) throw std::domain_error("bialternant_eval: points must be distinct");

  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = power(points[i], rho[j] + static_cast<long>(n - 1 - j));

  // Plain Gaussian elimination over the rationals.
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det / vandermonde;
}

BigInt power_sum(std::span<const BigInt> points, int S) {
  if (S < 0) throw std::invalid_argument("power_sum: negative exponent for integer points");
  BigInt s = 0;
  for (const BigInt& x : points) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(S));
    s += p;
  }
  return s;
}

Rational power_sum(std::span<const Rational> points, int S) {
  Rational s = 0;
  for (const Rational& x : points) s += S == 0 ? Rational(1) : power(x, S);
  return s;
}

}  // namespace sl2hilb::schur
