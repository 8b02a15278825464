#pragma once

// Human-readable renderings of series and coefficients.

#include <string>

#include "sl2hilb/rational_function.hpp"

namespace sl2hilb::cli {

enum class Style { Text, Latex };

/// Descending powers, e.g. "t^18 + 1" or "t^{18} + 1".
std::string format_polynomial(const exactalg::Polynomial& p, Style style = Style::Text);
/// "(1 - t^2)^2(1 - t^3)", or "1" when empty.
std::string format_denominator(const exactalg::FactoredDenominator& d, Style style = Style::Text);
/// "N / Q" in text, "\frac{N}{Q}" in LaTeX.
std::string format_series(const exactalg::RationalFunction& f, Style style = Style::Text);
/// "p/q" in text, "\frac{p}{q}" in LaTeX.
std::string format_rational(const Rational& x, Style style = Style::Text);

}  // namespace sl2hilb::cli
