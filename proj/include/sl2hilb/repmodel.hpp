#pragma once

// Finite-dimensional SL2(C) representations, their torus weights and the
// case split used by the closed-form Laurent coefficients.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sl2hilb::repmodel {

/// Direct sum V_{d_1} + ... + V_{d_r} + (trivial_count) V_0.
/// Degrees are kept sorted ascending and are all >= 1.
struct Representation {
  std::vector<int> degrees;
  int trivial_count = 0;

  /// D = sum of d_k + 1 over the non-trivial summands.
  int dimension() const;
  bool has_trivial() const { return trivial_count > 0; }
  Representation without_trivial() const { return Representation{degrees, 0}; }
  /// Canonical key such as "V1+2V3" or "2V0+V2"; stable across runs.
  std::string key() const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Builds a representation from a degree list in any order; zeros become
/// trivial summands. Throws std::invalid_argument on negative degrees or an
/// empty list.
Representation make_representation(std::vector<int> degrees);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Accepts "V1+2V3", "2*V3 + v1" and plain degree lists "3,3,1".
Representation parse_rep(std::string_view text);

/// One coordinate (k, i) of the representation: weight 2i - d_k.
struct WeightIndex {
  int summand;  // 0-based position in Representation::degrees
  int index;    // i in 0..d_k
  int weight;
};

struct WeightSystem {
  std::vector<WeightIndex> theta;   // all (k, i) in lexicographic order
  std::vector<WeightIndex> lambda;  // the entries of theta with weight > 0
  std::vector<long> a;              // weights of lambda, same order
  int C = 0;                        // |lambda|
  int e = 0;                        // number of zero weights
  int D = 0;                        // |theta|
  int sigma = 1;                    // 2 when every degree is even

  /// Position in theta of coordinate (summand, index).
  std::size_t theta_position(int summand, int index) const;
};

/// Requires no trivial summands.
WeightSystem weight_system(const Representation& rep);

enum class GammaCase {
  GenericEvenOrOdd,     // all even, two or more odd, or an odd degree > 1
  OneV1RestEven,        // d_1 = 1 and every other degree even
  ExceptionGamma0,      // V1, V2, V3, V4, 2V1
  ExceptionGamma2Only,  // closed forms hold for gamma0/gamma1 but not gamma2
};

struct CaseTag {
  GammaCase primary = GammaCase::GenericEvenOrOdd;
  bool gamma0_exception = false;  // closed forms for gamma0, gamma1 fail
  bool gamma2_exception = false;  // closed form for gamma2 fails
  bool one_v1_rest_even = false;  // selects the second gamma2 formula
};

/// Requires no trivial summands.
CaseTag classify_case(const Representation& rep);

std::string to_string(GammaCase c);

/// Weights top, top-2, ..., 2 - top, -top with their multiplicities.
struct WeightFamily {
  int top = -1;           // -1 when the family is absent
  std::vector<int> mult;  // mult[i] belongs to weight top - 2i

  bool empty() const { return top < 0; }
  int weight(std::size_t i) const { return top - 2 * static_cast<int>(i); }
};

struct GroupedWeights {
  WeightFamily even;
  WeightFamily odd;
};

GroupedWeights grouped_weights(const Representation& rep);

struct WeightMultiplicity {
  int weight;
  int mult;
};

/// Distinct weights of all summands, descending, with multiplicities.
std::vector<WeightMultiplicity> distinct_weights(const Representation& rep);

/// Every representation without trivial summands whose dimension lies in
/// [min_dim, max_dim], in a deterministic order.
std::vector<Representation> enumerate_representations(int min_dim, int max_dim);

}  // namespace sl2hilb::repmodel
