#include "sl2hilb/rational_function.hpp"

#include "sl2hilb/cyclotomic.hpp"

namespace sl2hilb::exactalg {

std::vector<Rational> series_quotient(const Polynomial& num, const Polynomial& den, int n) {
  if (den.coeff(0) == 0) throw std::domain_error("series_quotient: denominator vanishes at 0");
  std::vector<Rational> out(static_cast<std::size_t>(std::max(n, 0)));
  Rational inv0 = 1 / den.coeff(0);
  const auto& dc = den.coefficients();
  for (int k = 0; k < n; ++k) {
    Rational acc = num.coeff(k);
    int top = std::min(k, den.degree());
    for (int j = 1; j <= top; ++j) acc -= dc[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc * inv0;
  }
  return out;
}

IntPolynomial to_int_polynomial(const Polynomial& p) {
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    if (x.get_den() != 1) throw std::domain_error("to_int_polynomial: non-integral coefficient");
    c.push_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

Polynomial to_polynomial(const IntPolynomial& p) {
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  return Polynomial(std::move(c));
}

FactoredDenominator::FactoredDenominator(std::map<int, int> f) {
  for (auto [m, e] : f) {
    if (m < 1 || e < 0) throw std::invalid_argument("denominator factor (1 - t^m)^e needs m >= 1, e >= 0");
    if (e > 0) factors[m] = e;
  }
}

Polynomial FactoredDenominator::expand() const {
  Polynomial p = Polynomial::constant(1);
  for (auto [m, e] : factors) p.mul_one_minus_tpow(m, e);
  return p;
}

int FactoredDenominator::degree() const {
  int d = 0;
  for (auto [m, e] : factors) d += m * e;
  return d;
}

int FactoredDenominator::total_exponent() const {
  int s = 0;
  for (auto [m, e] : factors) s += e;
  return s;
}

FactoredDenominator& FactoredDenominator::operator*=(const FactoredDenominator& o) {
  for (auto [m, e] : o.factors) factors[m] += e;
  return *this;
}

RationalFunction::RationalFunction(Polynomial numerator, FactoredDenominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(Polynomial::constant(c), FactoredDenominator{});
}

int RationalFunction::degree() const {
  if (num_.is_zero()) throw std::domain_error("degree of the zero rational function");
  return num_.degree() - den_.degree();
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) {
    RationalFunction zero;
    zero.reduced_ = true;
    return zero;
  }
  Polynomial num = num_;
  CyclotomicExponents need = cyclotomic_exponents(den_);
  cancel_cyclotomic(num, need);
  FactoredDenominator covered = cover(need);
  RationalFunction out(num * cover_cofactor(need, covered), covered);
  out.reduced_ = true;
  return out;
}

RationalFunction& RationalFunction::operator*=(const Rational& s) {
  num_ *= s;
  return *this;
}

namespace {

// Brings f and g over the exponent-wise maximum of their denominators.
void common_denominator(const RationalFunction& f, const RationalFunction& g, Polynomial& nf, Polynomial& ng,
                        FactoredDenominator& den) {
  nf = f.numerator();
  ng = g.numerator();
  den = f.denominator();
  for (auto [m, e] : g.denominator().factors) {
    int& have = den.factors[m];
    if (have < e) {
      nf.mul_one_minus_tpow(m, e - have);
      have = e;
    }
  }
  for (auto [m, e] : den.factors) {
    auto it = g.denominator().factors.find(m);
    int eg = it == g.denominator().factors.end() ? 0 : it->second;
    if (eg < e) ng.mul_one_minus_tpow(m, e - eg);
  }
}

}  // namespace

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  Polynomial nf, ng;
  FactoredDenominator den;
  common_denominator(f, g, nf, ng, den);
  return RationalFunction(nf + ng, den);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return f + (-g); }

RationalFunction operator-(const RationalFunction& f) { return RationalFunction(-f.num_, f.den_); }

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  FactoredDenominator den = f.den_;
  den *= g.den_;
  return RationalFunction(f.num_ * g.num_, den);
}

RationalFunction RationalFunction::times_tpow(int k) const {
  if (k < 0) throw std::invalid_argument("times_tpow: negative shift");
  return RationalFunction(num_.shifted(k), den_);
}

RationalFunction RationalFunction::derivative() const {
  // (N/Q)' = (N' R + N sum_c e_c c t^{c-1} R/(1 - t^c)) / (Q R), R = prod_c (1 - t^c).
  Polynomial r = Polynomial::constant(1);
  for (auto [c, e] : den_.factors) r.mul_one_minus_tpow(c, 1);
  Polynomial out = num_.derivative() * r;
  for (auto [c, e] : den_.factors) {
    Polynomial r_c = Polynomial::constant(1);
    for (auto [c2, e2] : den_.factors)
      if (c2 != c) r_c.mul_one_minus_tpow(c2, 1);
    out += num_ * r_c.shifted(c - 1) * Rational(static_cast<long>(e) * c);
  }
  FactoredDenominator den = den_;
  for (auto& [c, e] : den.factors) ++e;
  return RationalFunction(out, den);
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g) {
  Polynomial nf, ng;
  FactoredDenominator den;
  common_denominator(f, g, nf, ng, den);
  return nf == ng;
}

std::vector<Rational> taylor_coeffs(const RationalFunction& f, int N) {
  if (N < 0) return {};
  std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N && i <= f.numerator().degree(); ++i) c[static_cast<std::size_t>(i)] = f.numerator().coeff(i);
  // Dividing by (1 - t^m) is a running sum with stride m.
  for (auto [m, e] : f.denominator().factors)
    for (int r = 0; r < e; ++r)
      for (int k = m; k <= N; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - m)];
  return c;
}

LaurentExpansion laurent_at_one(const RationalFunction& f, int k) {
  if (f.is_zero()) throw std::domain_error("laurent_at_one: zero function");
  // With t = 1 - s, 1 - t^m = s u_m(s) and u_m(0) = m.
  Polynomial p = f.numerator().at_one_minus();
  int v = p.valuation();
  LaurentExpansion out;
  out.pole_order = f.denominator().total_exponent() - v;
  if (k <= 0) return out;

  std::vector<Rational> num(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) num[static_cast<std::size_t>(j)] = p.coeff(v + j);

  Polynomial u = Polynomial::constant(1);
  for (auto [m, e] : f.denominator().factors) {
    std::vector<Rational> um(static_cast<std::size_t>(std::min(m, k)));
    for (int j = 0; j < static_cast<int>(um.size()); ++j) {
      Rational b(binomial(m, j + 1));
      um[static_cast<std::size_t>(j)] = (j % 2 == 0) ? b : Rational(-b);
    }
    Polynomial um_poly(std::move(um));
    for (int r = 0; r < e; ++r) u = (u * um_poly).truncated(k);
  }
  out.coeffs = series_quotient(Polynomial(num), u, k);
  return out;
}

bool satisfies_functional_equation(const RationalFunction& f, int sign, int shift) {
  if (f.is_zero()) return true;
  // f(1/t) = (-1)^E t^{deg Q - deg N} rev(N) / Q.
  const Polynomial& n = f.numerator();
  Polynomial lhs = n.reversed();
  if (f.denominator().total_exponent() % 2 != 0) lhs = -lhs;
  Polynomial rhs = n;
  if (sign < 0) rhs = -rhs;
  int k = f.denominator().degree() - n.degree() - shift;
  if (k >= 0)
    lhs = lhs.shifted(k);
  else
    rhs = rhs.shifted(-k);
  return lhs == rhs;
}

}  // namespace sl2hilb::exactalg
