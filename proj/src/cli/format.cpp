#include "sl2hilb/cli/format.hpp"

namespace sl2hilb::cli {

namespace {

std::string power_of_t(int k, Style style) {
  if (k == 0) return "";
  if (k == 1) return "t";
  std::string e = std::to_string(k);
  return style == Style::Latex ? "t^{" + e + "}" : "t^" + e;
}

}  // namespace

std::string format_rational(const Rational& x, Style style) {
  if (style == Style::Text || x.get_den() == 1) return to_string(x);
  std::string sign = x < 0 ? "-" : "";
  BigInt num = abs(x.get_num());
  return sign + "\\frac{" + to_string(num) + "}{" + to_string(BigInt(x.get_den())) + "}";
}

std::string format_polynomial(const exactalg::Polynomial& p, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    bool negative = c < 0;
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Rational mag = abs(c);
    std::string mono = power_of_t(k, style);
    if (mono.empty())
      out += format_rational(mag, style);
    else if (mag == 1)
      out += mono;
    else
      out += format_rational(mag, style) + (style == Style::Latex ? " " : "*") + mono;
  }
  return out;
}

std::string format_denominator(const exactalg::FactoredDenominator& d, Style style) {
  if (d.empty()) return "1";
  std::string out;
  for (auto [m, e] : d.factors) {
    out += "(1 - " + power_of_t(m, style) + ")";
    if (e != 1) out += style == Style::Latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

std::string format_series(const exactalg::RationalFunction& f, Style style) {
  std::string num = format_polynomial(f.numerator(), style);
  if (f.is_zero() || f.denominator().empty()) return num;
  std::string den = format_denominator(f.denominator(), style);
  if (style == Style::Latex) return "\\frac{" + num + "}{" + den + "}";
  bool single_term = f.numerator().degree() == f.numerator().valuation() && f.numerator().coeff(f.numerator().degree()) > 0;
  if (!single_term) num = "(" + num + ")";
  if (f.denominator().factors.size() > 1 || f.denominator().factors.begin()->second != 1) den = "(" + den + ")";
  return num + " / " + den;
}

}  // namespace sl2hilb::cli
