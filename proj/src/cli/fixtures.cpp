#include "sl2hilb/cli/fixtures.hpp"

#include "sl2hilb/cli/format.hpp"
#include "sl2hilb/laurent.hpp"

namespace sl2hilb::cli {

exactalg::RationalFunction FixtureRow::series() const {
  std::vector<Rational> c(numerator.begin(), numerator.end());
  return exactalg::RationalFunction(exactalg::Polynomial(std::move(c)), exactalg::FactoredDenominator(denominator));
}

const std::vector<FixtureRow>& table_fixtures() {
  static const std::vector<FixtureRow> rows = {
      {"V1", 2, {1}, {}, {"1", "0", "0", "0"}, 0},
      {"V2", 3, {1}, {{2, 1}}, {"1/2", "1/4", "1/8", "1/16"}, -2},
      {"V3", 4, {1}, {{4, 1}}, {"1/4", "3/8", "5/16", "5/32"}, -4},
      {"V4", 5, {1}, {{2, 1}, {3, 1}}, {"1/6", "1/4", "17/72", "25/144"}, -5},
      {"V5", 6, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
       {{4, 1}, {8, 1}, {12, 1}}, {"1/192", "1/128", "199/1152", "965/2304"}, -6},
      {"V6", 7, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
       {{2, 1}, {4, 1}, {6, 1}, {10, 1}}, {"1/240", "1/160", "71/720", "17/72"}, -7},
      {"V8", 9, {1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1},
       {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}}, {"1/1008", "1/672", "191/15120", "11/378"}, -9},
      {"2V1", 4, {1}, {{2, 1}}, {"1/2", "1/4", "1/8", "1/16"}, -2},
      {"2V2", 6, {1}, {{2, 3}}, {"1/8", "3/16", "3/16", "5/32"}, -6},
      {"2V3", 8, {1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1}, {{2, 1}, {4, 4}}, {"1/128", "3/256", "23/512", "95/1024"}, -8},
      {"2V4", 10, {1, 0, 0, 0, 1, 0, 0, 0, 1}, {{2, 3}, {3, 4}}, {"1/216", "1/144", "11/432", "5/96"}, -10},
      {"V1+V2", 5, {1}, {{2, 1}, {3, 1}}, {"1/6", "1/4", "17/72", "25/144"}, -5},
      {"V1+V3", 6, {1, 0, 0, 0, 0, 0, 1}, {{4, 3}}, {"1/32", "3/64", "9/64", "35/128"}, -6},
      {"V1+V4", 7, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {{2, 1}, {3, 1}, {5, 1}, {6, 1}},
       {"1/90", "1/60", "109/1080", "97/432"}, -7},
      {"V2+V3", 7, {1, 0, 0, 0, 0, 0, 0, 1}, {{2, 1}, {3, 1}, {4, 1}, {5, 1}},
       {"1/60", "1/40", "71/720", "59/288"}, -7},
      {"V2+V4", 8, {1, 0, 0, 0, 0, 0, 1}, {{2, 2}, {3, 2}, {4, 1}}, {"1/72", "1/48", "29/432", "115/864"}, -8},
  };
  return rows;
}

namespace {

void compare(std::vector<std::string>& diffs, const std::string& what, const Rational& want, const Rational& got) {
  if (want != got) diffs.push_back(what + ": table " + to_string(want) + ", computed " + to_string(got));
}

}  // namespace

std::vector<RowReport> check_table(const std::vector<FixtureRow>& rows, const series::HilbertOptions& options) {
  std::vector<RowReport> out;
  for (const FixtureRow& row : rows) {
    RowReport report{row.rep, {}};
    auto& diffs = report.diffs;
    try {
      repmodel::Representation rep = repmodel::parse_rep(row.rep);
      if (rep.dimension() != row.D)
        diffs.push_back("D: table " + std::to_string(row.D) + ", computed " + std::to_string(rep.dimension()));

      exactalg::RationalFunction h = series::hilbert_series(rep, options);
      exactalg::RationalFunction want = row.series();
      if (!exactalg::rf_equal(h, want))
        diffs.push_back("series: table " + format_series(want) + ", computed " + format_series(h));

      exactalg::LaurentExpansion l = exactalg::laurent_at_one(h, 4);
      laurent::GammaResult g = laurent::gammas(rep, options);
      for (std::size_t m = 0; m < 4; ++m) {
        Rational expected = parse_rational(row.gamma[m]);
        std::string name = "gamma" + std::to_string(m);
        compare(diffs, name + " (series)", expected, l.coeffs[m]);
        compare(diffs, name + " (" + laurent::to_string(g.method[m]) + ")", expected, g.gamma[m]);
      }
      if (h.degree() != row.a_invariant)
        diffs.push_back("a (series): table " + std::to_string(row.a_invariant) + ", computed " +
                        std::to_string(h.degree()));
      if (g.a_invariant != row.a_invariant)
        diffs.push_back("a: table " + std::to_string(row.a_invariant) + ", computed " + std::to_string(g.a_invariant));
    } catch (const std::exception& e) {
      diffs.push_back(std::string("error: ") + e.what());
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace sl2hilb::cli
