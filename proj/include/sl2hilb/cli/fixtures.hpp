#pragma once

// The published table of low-dimensional exceptions, shipped as data, and
// an end-to-end comparison of each row against a fresh computation.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sl2hilb/series.hpp"

namespace sl2hilb::cli {

struct FixtureRow {
  std::string rep;
  int D = 0;
  std::vector<long> numerator;  // ascending powers of t
  std::map<int, int> denominator;
  std::array<std::string, 4> gamma;
  long a_invariant = 0;

  exactalg::RationalFunction series() const;
};

/// All 16 rows, values exactly as tabulated.
const std::vector<FixtureRow>& table_fixtures();

struct RowReport {
  std::string rep;
  std::vector<std::string> diffs;  // empty when the row matches
  bool ok() const { return diffs.empty(); }
};

/// Recomputes each row: dimension, series (rf_equal), the four coefficients
/// from the Laurent expansion of the series and from gammas(), and the
/// a-invariant.
std::vector<RowReport> check_table(const std::vector<FixtureRow>& rows, const series::HilbertOptions& options = {});

}  // namespace sl2hilb::cli
