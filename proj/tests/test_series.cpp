#include <random>

#include "doctest.h"
#include "sl2hilb/oracle.hpp"
#include "sl2hilb/series.hpp"

using namespace sl2hilb;
using namespace sl2hilb::series;
using exactalg::FactoredDenominator;
using exactalg::Polynomial;
using repmodel::parse_rep;

namespace {

RationalFunction rf(std::vector<Rational> num, std::map<int, int> den) {
  return RationalFunction(Polynomial(std::move(num)), FactoredDenominator(std::move(den)));
}

std::vector<Rational> ints(std::initializer_list<long> v) { return std::vector<Rational>(v.begin(), v.end()); }

// prod_l (1 - t x_l)^{-mu_l}
Rational product_side(const std::vector<Rational>& x, const std::vector<int>& mu, const Rational& t) {
  Rational v = 1;
  for (std::size_t l = 0; l < x.size(); ++l) v /= power(Rational(1 - t * x[l]), mu[l]);
  return v;
}

std::pair<std::vector<int>, std::vector<int>> weights_of(const repmodel::Representation& rep) {
  std::vector<int> w, m;
  for (auto x : repmodel::distinct_weights(rep)) {
    w.push_back(x.weight);
    m.push_back(x.mult);
  }
  return {w, m};
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("partial fractions: one weight") {
    auto g = partial_fraction_numeric({Rational(5)}, {3}, 0);
    CHECK(g == ints({1, 0, 0}));
  }

  TEST_CASE("partial fractions: two simple weights") {
    Rational x(2), y(3);
    CHECK(partial_fraction_numeric({x, y}, {1, 1}, 0) == std::vector<Rational>{1 / (1 - y / x)});
    CHECK(partial_fraction_numeric({x, y}, {1, 1}, 1) == std::vector<Rational>{1 / (1 - x / y)});
  }

  TEST_CASE("partial fractions: a double and a simple pole") {
    // 1/((1-2t)^2 (1-3t)) = A/(1-2t)^2 + B/(1-2t) + C/(1-3t) with
    // A = 1/(1-3/2) = -2, C = 1/(1-2/3)^2 = 9, and B = -6 from t = 0.
    std::vector<Rational> x{2, 3};
    auto gx = partial_fraction_numeric(x, {2, 1}, 0);
    auto gy = partial_fraction_numeric(x, {2, 1}, 1);
    CHECK(gx == ints({-2, -6}));
    CHECK(gy == ints({9}));
    for (Rational t : {Rational(1, 7), Rational(-2, 3), Rational(5, 11)}) {
      Rational sum = gx[0] / power(Rational(1 - 2 * t), 2) + gx[1] / (1 - 2 * t) + gy[0] / (1 - 3 * t);
      CHECK(sum == product_side(x, {2, 1}, t));
    }
  }

  TEST_CASE("property: partial fraction reconstruction for every weight system with D <= 10") {
    const std::vector<Rational> zs{Rational(3, 2), Rational(2, 5), Rational(-4, 3)};
    const std::vector<Rational> ts{Rational(1, 7), Rational(-2, 9)};
    for (const auto& rep : repmodel::enumerate_representations(2, 10)) {
      auto [w, mu] = weights_of(rep);
      auto terms = partial_fraction(w, mu);
      for (const Rational& z : zs) {
        std::vector<Rational> x;
        for (int wl : w) x.push_back(power(z, wl));
        for (const Rational& t : ts) {
          Rational sum = 0;
          for (const auto& term : terms)
            sum += term.coefficient.eval(z) / power(Rational(1 - t * power(z, term.weight)), term.order);
          CAPTURE(rep.key());
          CHECK(sum == product_side(x, mu, t));
        }
        // The symbolic and numeric recurrences agree at z.
        for (std::size_t i = 0; i < w.size(); ++i) {
          auto sym = partial_fraction_coefficients(w, mu, i);
          auto num = partial_fraction_numeric(x, mu, i);
          for (std::size_t j = 0; j < sym.size(); ++j) CHECK(sym[j].eval(z) == num[j]);
        }
      }
    }
  }

  TEST_CASE("partial fraction argument checks") {
    CHECK_THROWS_AS(partial_fraction({1, 1}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partial_fraction({1, 2}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(partial_fraction({1}, {1, 1}), std::invalid_argument);
  }

  TEST_CASE("U_a on simple inputs") {
    ZRationalFunction geo = ZRationalFunction::inverse_power(1, 1);
    CHECK(exactalg::rf_equal(ua_transform(geo, 1), rf({1}, {{1, 1}})));
    CHECK(exactalg::rf_equal(ua_transform(geo, 2), rf({1}, {{1, 1}})));
    // Only exponents 6i divisible by 4 survive: i even.
    RationalFunction u6 = ua_transform(ZRationalFunction::inverse_power(4, 1), 6);
    CHECK(exactalg::rf_equal(u6, rf({1}, {{2, 1}})));
    CHECK(u6.denominator() == FactoredDenominator(std::map<int, int>{{2, 1}}));
    // a = 0 keeps the constant term over (1 - t).
    ZRationalFunction f = ZRationalFunction::constant(3) * ZRationalFunction::inverse_power(2, 2);
    CHECK(exactalg::rf_equal(ua_transform(f, 0), rf({3}, {{1, 1}})));
  }

  TEST_CASE("property: U_a picks every a-th coefficient") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> b(1, 6), e(1, 2), c(-3, 3), deg(0, 6);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Rational> num;
      int d = deg(rng);
      for (int i = 0; i <= d; ++i) num.emplace_back(c(rng));
      ZRationalFunction F(Polynomial(num), 0, {{b(rng), e(rng)}, {b(rng), e(rng)}}, Polynomial::constant(1));
      if (F.is_zero()) continue;
      int a = 1 + trial % 5;
      RationalFunction u = ua_transform(F, a);
      auto z = F.maclaurin(a * 20 + 1);
      auto got = exactalg::taylor_coeffs(u, 20);
      for (int i = 0; i <= 20; ++i) CHECK(got[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(i * a)]);
    }
  }

  TEST_CASE("D_n operator") {
    RationalFunction f = rf({1, 2}, {{3, 1}});
    CHECK(exactalg::rf_equal(dn_apply(f, 0), f));
    CHECK(exactalg::rf_equal(dn_apply(rf({1}, {{1, 1}}), 1), rf({1}, {{1, 2}})));
    // D_{m-1}/(m-1)! multiplies the i-th coefficient by C(m-1+i, m-1).
    for (int m = 1; m <= 5; ++m) {
      RationalFunction g = dn_apply(f, m - 1);
      g *= Rational(1) / Rational(factorial(static_cast<unsigned long>(m - 1)));
      auto before = exactalg::taylor_coeffs(f, 15), after = exactalg::taylor_coeffs(g, 15);
      for (int i = 0; i <= 15; ++i)
        CHECK(after[static_cast<std::size_t>(i)] == Rational(binomial(m - 1 + i, m - 1)) * before[static_cast<std::size_t>(i)]);
    }
  }

  TEST_CASE("Hilbert series of small representations") {
    CHECK(exactalg::rf_equal(hilbert_series(parse_rep("V1")), rf({1}, {})));
    CHECK(exactalg::rf_equal(hilbert_series(parse_rep("V3")), rf({1}, {{4, 1}})));
    std::vector<Rational> v5(19, Rational(0));
    v5[0] = v5[18] = 1;
    CHECK(exactalg::rf_equal(hilbert_series(parse_rep("V5")), rf(v5, {{4, 1}, {8, 1}, {12, 1}})));
  }

  TEST_CASE("the V2 + 2V3 series") {
    RationalFunction want = rf(ints({1, 0, 0, 1, 3, 4, 5, 8, 7, 3, 2, -2, -3, -7, -8, -5, -4, -3, -1, 0, 0, -1}),
                               {{2, 2}, {3, 2}, {4, 3}, {5, 2}});
    RationalFunction got = hilbert_series(parse_rep("V2+2V3"));
    CHECK(exactalg::rf_equal(got, want));
    CHECK(got.denominator() == want.denominator());
  }

  TEST_CASE("trivial summands") {
    CHECK(exactalg::rf_equal(hilbert_series(parse_rep("V0")), rf({1}, {{1, 1}})));
    CHECK(exactalg::rf_equal(hilbert_series(parse_rep("2V0+V2")), rf({1}, {{1, 2}, {2, 1}})));
    CHECK_THROWS_AS(hilbert_series(repmodel::Representation{}), std::invalid_argument);
  }

  TEST_CASE("threads and summand order do not change the result") {
    HilbertOptions four;
    four.threads = 4;
    for (const char* r : {"V2+2V3", "V1+V3+V6", "V9"}) {
      RationalFunction one = hilbert_series(parse_rep(r));
      RationalFunction many = hilbert_series(parse_rep(r), four);
      CHECK(one.numerator() == many.numerator());
      CHECK(one.denominator() == many.denominator());
    }
    CHECK(hilbert_series(parse_rep("V6+V1+V3")).numerator() == hilbert_series(parse_rep("V1+V3+V6")).numerator());
  }

  TEST_CASE("property: structure of every series with D <= 12") {
    for (const auto& rep : repmodel::enumerate_representations(2, 12)) {
      CAPTURE(rep.key());
      RationalFunction h = hilbert_series(rep);
      const int D = rep.dimension();
      CHECK(h.degree() <= 0);
      CHECK(h.numerator().degree() <= h.denominator().degree());
      auto coeffs = exactalg::taylor_coeffs(h, 30);
      auto want = oracle::truncated_series(rep, 30);
      for (int n = 0; n <= 30; ++n) {
        CHECK(coeffs[static_cast<std::size_t>(n)] >= 0);
        CHECK(coeffs[static_cast<std::size_t>(n)] == Rational(want[static_cast<std::size_t>(n)]));
      }
      bool small = rep.key() == "V1" || rep.key() == "2V1" || rep.key() == "V2";
      if (small) continue;
      CHECK(h.degree() == -D);
      CHECK(exactalg::satisfies_functional_equation(h, (D - 3) % 2 == 0 ? 1 : -1, D));
      CHECK(exactalg::laurent_at_one(h, 1).pole_order == D - 3);
    }
  }
}
