#include "sl2hilb/cli/hilbert_result.hpp"

#include <chrono>
#include <limits>

#include "sl2hilb/laurent.hpp"

namespace sl2hilb::cli {

using json = nlohmann::ordered_json;

const char* tool_version() { return SL2HILB_VERSION; }

namespace {

json integer_to_json(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return to_string(x);
}

BigInt integer_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not a decimal integer: " + j.dump());
    return x;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

template <class T>
T checked_get(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

HilbertResult compute_result(const repmodel::Representation& rep, const series::HilbertOptions& options) {
  auto start = std::chrono::steady_clock::now();
  HilbertResult r;
  r.rep = rep;
  r.version = tool_version();
  r.series = series::hilbert_series(rep, options);
  if (rep.has_trivial() || rep.degrees.empty()) {
    exactalg::LaurentExpansion l = exactalg::laurent_at_one(r.series, 4);
    for (std::size_t m = 0; m < 4; ++m) {
      r.gamma[m] = l.coeffs[m];
      r.methods[m] = laurent::to_string(laurent::Method::SeriesFallback);
    }
    r.pole_order = l.pole_order;
    r.a_invariant = r.series.degree();
  } else {
    // The series was already checked against the oracle; skip that here.
    series::HilbertOptions inner = options;
    inner.verify_degree = -1;
    laurent::GammaResult g = laurent::gammas(rep, inner);
    for (std::size_t m = 0; m < 4; ++m) {
      r.gamma[m] = g.gamma[m];
      r.methods[m] = laurent::to_string(g.method[m]);
    }
    r.pole_order = g.pole_order;
    r.a_invariant = g.a_invariant;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json to_json(const HilbertResult& r) {
  json rep = json::array();
  for (int i = 0; i < r.rep.trivial_count; ++i) rep.push_back(0);
  for (int d : r.rep.degrees) rep.push_back(d);
  exactalg::IntPolynomial num = exactalg::to_int_polynomial(r.series.numerator());
  json numerator = json::array();
  for (const BigInt& c : num.coefficients()) numerator.push_back(integer_to_json(c));
  json denominator = json::array();
  for (auto [m, e] : r.series.denominator().factors) denominator.push_back({m, e});
  json gamma = json::array();
  for (const Rational& g : r.gamma) gamma.push_back(to_string(g));
  return json{{"rep", rep},
              {"numerator", numerator},
              {"denominator", denominator},
              {"gamma", gamma},
              {"a_invariant", r.a_invariant},
              {"pole_order", r.pole_order},
              {"methods", r.methods},
              {"version", r.version}};
}

HilbertResult from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("HilbertResult must be a JSON object");
  HilbertResult r;
  r.rep = repmodel::make_representation(checked_get<std::vector<int>>(j, "rep"));

  if (!j.contains("numerator") || !j["numerator"].is_array()) throw std::invalid_argument("numerator must be an array");
  std::vector<Rational> num;
  for (const json& c : j["numerator"]) num.emplace_back(integer_from_json(c));

  if (!j.contains("denominator") || !j["denominator"].is_array())
    throw std::invalid_argument("denominator must be an array");
  std::map<int, int> den;
  for (const json& f : j["denominator"]) {
    if (!f.is_array() || f.size() != 2 || !f[0].is_number_integer() || !f[1].is_number_integer())
      throw std::invalid_argument("denominator entries must be [m, e] pairs");
    int m = f[0].get<int>(), e = f[1].get<int>();
    if (m < 1 || e < 1) throw std::invalid_argument("denominator entries need m, e >= 1");
    den[m] += e;
  }
  r.series = exactalg::RationalFunction(exactalg::Polynomial(std::move(num)), exactalg::FactoredDenominator(den));

  auto gamma = checked_get<std::vector<std::string>>(j, "gamma");
  auto methods = checked_get<std::vector<std::string>>(j, "methods");
  if (gamma.size() != 4 || methods.size() != 4) throw std::invalid_argument("gamma and methods need four entries");
  for (std::size_t m = 0; m < 4; ++m) {
    r.gamma[m] = parse_rational(gamma[m]);
    r.methods[m] = methods[m];
  }
  r.a_invariant = checked_get<long>(j, "a_invariant");
  r.pole_order = checked_get<int>(j, "pole_order");
  r.version = checked_get<std::string>(j, "version");
  return r;
}

bool same_result(const HilbertResult& a, const HilbertResult& b) {
  return a.rep == b.rep && exactalg::rf_equal(a.series, b.series) && a.gamma == b.gamma && a.methods == b.methods &&
         a.a_invariant == b.a_invariant && a.pole_order == b.pole_order && a.version == b.version;
}

}  // namespace sl2hilb::cli
