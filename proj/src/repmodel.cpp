#include "sl2hilb/repmodel.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace sl2hilb::repmodel {

int Representation::dimension() const {
  int d = 0;
  for (int deg : degrees) d += deg + 1;
  return d;
}

std::string Representation::key() const {
  std::map<int, int> counts;
  if (trivial_count > 0) counts[0] = trivial_count;
  for (int d : degrees) ++counts[d];
  std::string out;
  for (auto [deg, mult] : counts) {
    if (!out.empty()) out += '+';
    if (mult > 1) out += std::to_string(mult);
    out += 'V' + std::to_string(deg);
  }
  return out;
}

Representation make_representation(std::vector<int> degrees) {
  if (degrees.empty()) throw std::invalid_argument("representation needs at least one summand");
  Representation rep;
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("negative degree " + std::to_string(d));
    if (d == 0)
      ++rep.trivial_count;
    else
      rep.degrees.push_back(d);
  }
  std::sort(rep.degrees.begin(), rep.degrees.end());
  return rep;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Representation parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty representation", pos_);
    std::vector<int> degrees;
    bool list_form = (std::isdigit(peek()) || peek() == '-') && !term_follows_number();
    if (list_form) {
      degrees.push_back(signed_number("degree"));
      skip_ws();
      while (pos_ < text_.size() && peek() == ',') {
        ++pos_;
        degrees.push_back(signed_number("degree"));
        skip_ws();
      }
    } else {
      term(degrees);
      skip_ws();
      while (pos_ < text_.size() && peek() == '+') {
        ++pos_;
        term(degrees);
        skip_ws();
      }
    }
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return make_representation(std::move(degrees));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  int peek() const { return static_cast<unsigned char>(text_[pos_]); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(peek())) ++pos_;
  }

  // A leading number is a multiplicity when a 'V' (optionally after '*') follows.
  bool term_follows_number() const {
    std::size_t p = pos_;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p < text_.size() && text_[p] == '*') return true;
    return p < text_.size() && (text_[p] == 'V' || text_[p] == 'v');
  }

  int unsigned_number(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(peek())) {
      value = value * 10 + (peek() - '0');
      if (value > INT_MAX / 4) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return static_cast<int>(value);
  }

  int signed_number(const char* what) {
    skip_ws();
    if (pos_ < text_.size() && peek() == '-') {
      std::size_t at = pos_;
      ++pos_;
      unsigned_number(what);
      throw ParseError("negative degree", at);
    }
    return unsigned_number(what);
  }

  void term(std::vector<int>& degrees) {
    skip_ws();
    int mult = 1;
    if (pos_ < text_.size() && std::isdigit(peek())) {
      std::size_t at = pos_;
      mult = unsigned_number("multiplicity");
      if (mult < 1) throw ParseError("multiplicity must be at least 1", at);
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || (peek() != 'V' && peek() != 'v'))
      throw ParseError("expected 'V'", pos_);
    ++pos_;
    int degree = signed_number("degree");
    degrees.insert(degrees.end(), static_cast<std::size_t>(mult), degree);
  }
};

}  // namespace

Representation parse_rep(std::string_view text) { return Parser(text).parse(); }

std::size_t WeightSystem::theta_position(int summand, int index) const {
  for (std::size_t p = 0; p < theta.size(); ++p)
    if (theta[p].summand == summand && theta[p].index == index) return p;
  throw std::out_of_range("no such coordinate");
}

WeightSystem weight_system(const Representation& rep) {
  if (rep.has_trivial()) throw std::invalid_argument("weight_system: strip trivial summands first");
  WeightSystem ws;
  bool all_even = true;
  for (std::size_t k = 0; k < rep.degrees.size(); ++k) {
    int d = rep.degrees[k];
    if (d % 2 != 0) all_even = false;
    for (int i = 0; i <= d; ++i) {
      WeightIndex w{static_cast<int>(k), i, 2 * i - d};
      ws.theta.push_back(w);
      if (w.weight > 0) {
        ws.lambda.push_back(w);
        ws.a.push_back(w.weight);
      } else if (w.weight == 0) {
        ++ws.e;
      }
    }
  }
  ws.C = static_cast<int>(ws.lambda.size());
  ws.D = static_cast<int>(ws.theta.size());
  ws.sigma = all_even ? 2 : 1;
  return ws;
}

CaseTag classify_case(const Representation& rep) {
  if (rep.has_trivial()) throw std::invalid_argument("classify_case: strip trivial summands first");
  if (rep.degrees.empty()) throw std::invalid_argument("classify_case: empty representation");
  const auto& d = rep.degrees;
  static const std::vector<std::vector<int>> gamma0_list = {{1}, {2}, {3}, {4}, {1, 1}};
  static const std::vector<std::vector<int>> gamma2_only = {
      {5}, {6}, {8}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {4, 4}};
  CaseTag tag;
  tag.gamma0_exception = std::find(gamma0_list.begin(), gamma0_list.end(), d) != gamma0_list.end();
  tag.gamma2_exception =
      tag.gamma0_exception || std::find(gamma2_only.begin(), gamma2_only.end(), d) != gamma2_only.end();
  int odd = 0;
  for (int x : d) odd += x % 2;
  tag.one_v1_rest_even = odd == 1 && d.front() == 1;
  if (tag.gamma0_exception)
    tag.primary = GammaCase::ExceptionGamma0;
  else if (tag.gamma2_exception)
    tag.primary = GammaCase::ExceptionGamma2Only;
  else if (tag.one_v1_rest_even)
    tag.primary = GammaCase::OneV1RestEven;
  else
    tag.primary = GammaCase::GenericEvenOrOdd;
  return tag;
}

std::string to_string(GammaCase c) {
  switch (c) {
    case GammaCase::GenericEvenOrOdd: return "GenericEvenOrOdd";
    case GammaCase::OneV1RestEven: return "OneV1RestEven";
    case GammaCase::ExceptionGamma0: return "ExceptionGamma0";
    case GammaCase::ExceptionGamma2Only: return "ExceptionGamma2Only";
  }
  return "?";
}

GroupedWeights grouped_weights(const Representation& rep) {
  GroupedWeights g;
  for (int parity = 0; parity < 2; ++parity) {
    WeightFamily& fam = parity == 0 ? g.even : g.odd;
    for (int d : rep.degrees)
      if (d % 2 == parity) fam.top = std::max(fam.top, d);
    if (fam.top < 0) continue;
    fam.mult.assign(static_cast<std::size_t>(fam.top + 1), 0);
    for (int d : rep.degrees) {
      if (d % 2 != parity) continue;
      for (int i = 0; i <= fam.top; ++i)
        if (std::abs(fam.top - 2 * i) <= d) ++fam.mult[static_cast<std::size_t>(i)];
    }
  }
  return g;
}

std::vector<WeightMultiplicity> distinct_weights(const Representation& rep) {
  std::map<int, int, std::greater<int>> counts;
  for (int d : rep.degrees)
    for (int i = 0; i <= d; ++i) ++counts[d - 2 * i];
  std::vector<WeightMultiplicity> out;
  for (auto [w, m] : counts) out.push_back({w, m});
  return out;
}

std::vector<Representation> enumerate_representations(int min_dim, int max_dim) {
  std::vector<Representation> out;
  std::vector<int> current;
  // Parts are summand dimensions d + 1 >= 2, generated in non-decreasing order.
  std::function<void(int, int)> rec = [&](int remaining_max, int smallest) {
    int dim = 0;
    for (int d : current) dim += d + 1;
    if (!current.empty() && dim >= min_dim) out.push_back(Representation{current, 0});
    for (int part = smallest; part <= remaining_max; ++part) {
      current.push_back(part - 1);
      rec(remaining_max - part, part);
      current.pop_back();
    }
  };
  rec(max_dim, 2);
  std::stable_sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
    return a.dimension() < b.dimension();
  });
  return out;
}

}  // namespace sl2hilb::repmodel
