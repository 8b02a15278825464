#pragma once

// Invariant dimensions by direct weight counting. Shares no code with the
// rational-function pipeline so it can serve as its independent check.

#include <span>
#include <vector>

#include "sl2hilb/number.hpp"
#include "sl2hilb/repmodel.hpp"

namespace sl2hilb::oracle {

/// Number of degree-n monomials of each torus weight, for n = 0..N.
class WeightCountTable {
 public:
  WeightCountTable(const repmodel::Representation& rep, int N);

  int max_degree() const { return N_; }
  /// Count of degree-n monomials of weight w; zero outside the table.
  const BigInt& count(int n, int w) const;

 private:
  int N_;
  int offset_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
};

/// dim S^n(V)^{SL2} = c(n, 0) - c(n, 2). Trivial summands are counted as weight-zero coordinates.
BigInt dim_invariants(const repmodel::Representation& rep, int n);

/// dim_invariants for n = 0..N.
std::vector<BigInt> truncated_series(const repmodel::Representation& rep, int N);

/// Invariants of multidegree p (one entry per non-trivial summand).
BigInt multigraded_dim(const repmodel::Representation& rep, std::span<const int> p);

}  // namespace sl2hilb::oracle
