#include "sl2hilb/cyclotomic.hpp"

#include <mutex>
#include <unordered_map>

namespace sl2hilb::exactalg {

namespace {

std::mutex cache_mutex;
std::unordered_map<int, Polynomial> cache;

// Phi_m(t) monic, computed as (t^m - 1) / prod_{d | m, d < m} Phi_d.
Polynomial monic_cyclotomic(int m) {
  Polynomial p = Polynomial::monomial(1, m) - Polynomial::constant(1);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    Polynomial phi_d = monic_cyclotomic(d);
    p = *divide_exact(p, phi_d);
  }
  return p;
}

}  // namespace

const Polynomial& cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  Polynomial p = m == 1 ? Polynomial{1, -1} : monic_cyclotomic(m);
  return cache.emplace(m, std::move(p)).first->second;
}

CyclotomicExponents cyclotomic_exponents(const FactoredDenominator& den) {
  CyclotomicExponents out;
  for (auto [m, e] : den.factors)
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) out[d] += e;
  return out;
}

Polynomial expand(const CyclotomicExponents& ex) {
  Polynomial acc = Polynomial::constant(1);
  for (auto [d, e] : ex)
    for (int i = 0; i < e; ++i) acc *= cyclotomic(d);
  return acc;
}

int cancel_cyclotomic(Polynomial& num, CyclotomicExponents& den) {
  int removed = 0;
  if (num.is_zero()) return 0;
  for (auto& [d, e] : den) {
    // Divide by the monic Phi_d; for d = 1 the stored factor is -(t - 1).
    const Polynomial phi = d == 1 ? Polynomial{-1, 1} : cyclotomic(d);
    while (e > 0) {
      auto q = divide_exact(num, phi);
      if (!q) break;
      num = d == 1 ? -*q : *q;
      --e;
      ++removed;
    }
  }
  for (auto it = den.begin(); it != den.end();) it = it->second == 0 ? den.erase(it) : std::next(it);
  return removed;
}

FactoredDenominator cover(const CyclotomicExponents& need) {
  std::map<int, int> left(need.begin(), need.end());
  FactoredDenominator out;
  while (true) {
    int top = 0;
    for (auto [d, e] : left)
      if (e > 0) top = d;
    if (top == 0) break;
    int count = left[top];
    out.factors[top] += count;
    for (int d = 1; d <= top; ++d)
      if (top % d == 0) left[d] -= count;
  }
  return out;
}

Polynomial cover_cofactor(const CyclotomicExponents& need, const FactoredDenominator& covered) {
  CyclotomicExponents have = cyclotomic_exponents(covered);
  CyclotomicExponents extra;
  for (auto [d, e] : have) {
    auto it = need.find(d);
    int n = it == need.end() ? 0 : it->second;
    if (e < n) throw std::logic_error("cover does not contain the requested factors");
    if (e > n) extra[d] = e - n;
  }
  return expand(extra);
}

}  // namespace sl2hilb::exactalg
