#include "sl2hilb/oracle.hpp"

#include <stdexcept>

namespace sl2hilb::oracle {

namespace {

std::vector<int> coordinate_weights(const repmodel::Representation& rep) {
  std::vector<int> w(static_cast<std::size_t>(rep.trivial_count), 0);
  for (int d : rep.degrees)
    for (int i = 0; i <= d; ++i) w.push_back(2 * i - d);
  return w;
}

}  // namespace

WeightCountTable::WeightCountTable(const repmodel::Representation& rep, int N) : N_(N) {
  if (N < 0) throw std::invalid_argument("WeightCountTable: negative degree bound");
  int top = 0;
  for (int d : rep.degrees) top = std::max(top, d);
  offset_ = top * N;
  const std::size_t width = static_cast<std::size_t>(2 * offset_ + 1);
  rows_.assign(static_cast<std::size_t>(N) + 1, std::vector<BigInt>(width, 0));
  rows_[0][static_cast<std::size_t>(offset_)] = 1;
  // Adding one coordinate of weight a: new[n][w] = old[n][w] + new[n-1][w-a].
  for (int a : coordinate_weights(rep)) {
    for (int n = 1; n <= N; ++n) {
      auto& cur = rows_[static_cast<std::size_t>(n)];
      const auto& below = rows_[static_cast<std::size_t>(n - 1)];
      int lo = std::max(0, a), hi = static_cast<int>(width) + std::min(0, a);
      for (int w = lo; w < hi; ++w) {
        const BigInt& src = below[static_cast<std::size_t>(w - a)];
        if (src != 0) cur[static_cast<std::size_t>(w)] += src;
      }
    }
  }
}

const BigInt& WeightCountTable::count(int n, int w) const {
  if (n < 0 || n > N_ || w < -offset_ || w > offset_) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(w + offset_)];
}

BigInt dim_invariants(const repmodel::Representation& rep, int n) {
  WeightCountTable t(rep, n);
  return t.count(n, 0) - t.count(n, 2);
}

std::vector<BigInt> truncated_series(const repmodel::Representation& rep, int N) {
  WeightCountTable t(rep, N);
  std::vector<BigInt> out;
  for (int n = 0; n <= N; ++n) out.push_back(t.count(n, 0) - t.count(n, 2));
  return out;
}

BigInt multigraded_dim(const repmodel::Representation& rep, std::span<const int> p) {
  if (p.size() != rep.degrees.size()) throw std::invalid_argument("multigraded_dim: one degree per summand expected");
  // Weight distribution of the product of per-summand homogeneous pieces.
  std::vector<BigInt> acc{1};
  int acc_offset = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < 0) throw std::invalid_argument("multigraded_dim: negative degree");
    repmodel::Representation single{{rep.degrees[k]}, 0};
    WeightCountTable t(single, p[k]);
    int span = rep.degrees[k] * p[k];
    std::vector<BigInt> next(acc.size() + static_cast<std::size_t>(2 * span), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (int w = -span; w <= span; ++w) {
        const BigInt& c = t.count(p[k], w);
        if (c != 0) next[i + static_cast<std::size_t>(w + span)] += acc[i] * c;
      }
    }
    acc = std::move(next);
    acc_offset += span;
  }
  auto at = [&](int w) -> BigInt {
    int idx = w + acc_offset;
    return (idx < 0 || idx >= static_cast<int>(acc.size())) ? BigInt(0) : acc[static_cast<std::size_t>(idx)];
  };
  return at(0) - at(2);
}

}  // namespace sl2hilb::oracle
