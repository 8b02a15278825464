#pragma once

// Everything one computation produces, and its JSON form:
//   { "rep": [d_1, ...], "numerator": [c_0, c_1, ...], "denominator": [[m, e], ...],
//     "gamma": ["p/q" x4], "a_invariant": n, "pole_order": n, "methods": [str x4],
//     "version": str }
// Integers that do not fit in 64 bits are written as decimal strings.

#include <array>
#include <string>

#include "json.hpp"
#include "sl2hilb/rational_function.hpp"
#include "sl2hilb/repmodel.hpp"
#include "sl2hilb/series.hpp"

namespace sl2hilb::cli {

struct HilbertResult {
  repmodel::Representation rep;
  exactalg::RationalFunction series;
  std::array<Rational, 4> gamma;
  std::array<std::string, 4> methods;
  long a_invariant = 0;
  int pole_order = 0;
  std::string version;
  double seconds = 0;  // wall time of compute_result; not serialized
};

/// Series plus coefficients. Representations with trivial summands take all
/// coefficients from the series.
HilbertResult compute_result(const repmodel::Representation& rep, const series::HilbertOptions& options = {});

nlohmann::ordered_json to_json(const HilbertResult& r);
/// Throws std::invalid_argument on a malformed document.
HilbertResult from_json(const nlohmann::ordered_json& j);

/// Structural equality: rf_equal series and identical scalar fields.
bool same_result(const HilbertResult& a, const HilbertResult& b);

const char* tool_version();

}  // namespace sl2hilb::cli
