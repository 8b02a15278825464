#include "sl2hilb/zrational.hpp"

#include <stdexcept>

namespace sl2hilb::series {

ZRationalFunction::ZRationalFunction(Polynomial numerator, int low, std::map<int, int> tracked, Polynomial untracked)
    : num_(std::move(numerator)), low_(low), untracked_(std::move(untracked)) {
  if (untracked_.is_zero()) throw std::invalid_argument("ZRationalFunction: zero denominator");
  for (auto [b, e] : tracked) {
    if (b < 1 || e < 0) throw std::invalid_argument("ZRationalFunction: bad factor (1 - z^b)^e");
    if (e > 0) tracked_[b] = e;
  }
  normalize();
}

void ZRationalFunction::normalize() {
  if (num_.is_zero()) {
    low_ = 0;
    tracked_.clear();
    untracked_ = Polynomial::constant(1);
    return;
  }
  int v = num_.valuation();
  if (v > 0) {
    std::vector<Rational> c(num_.coefficients().begin() + v, num_.coefficients().end());
    num_ = Polynomial(std::move(c));
    low_ += v;
  }
}

ZRationalFunction ZRationalFunction::constant(const Rational& c) { return monomial(c, 0); }

ZRationalFunction ZRationalFunction::monomial(const Rational& c, int k) {
  return ZRationalFunction(Polynomial::constant(c), k, {}, Polynomial::constant(1));
}

ZRationalFunction ZRationalFunction::inverse_power(int b, int e) {
  return ZRationalFunction(Polynomial::constant(1), 0, {{b, e}}, Polynomial::constant(1));
}

int ZRationalFunction::degree() const {
  if (num_.is_zero()) throw std::domain_error("degree of the zero function");
  int d = low_ + num_.degree() - untracked_.degree();
  for (auto [b, e] : tracked_) d -= b * e;
  return d;
}

bool ZRationalFunction::expandable_at_zero() const {
  if (num_.is_zero()) return true;
  // U(0) == 0 would add a pole unless the numerator compensates; be strict.
  int uv = untracked_.valuation();
  return low_ - uv >= 0;
}

ZRationalFunction& ZRationalFunction::operator*=(const Rational& s) {
  num_ *= s;
  normalize();
  return *this;
}

ZRationalFunction& ZRationalFunction::operator/=(long s) {
  if (s == 0) throw std::domain_error("division by zero");
  num_ *= Rational(1, s);
  return *this;
}

ZRationalFunction operator*(const ZRationalFunction& f, const ZRationalFunction& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::map<int, int> tracked = f.tracked_;
  for (auto [b, e] : g.tracked_) tracked[b] += e;
  Polynomial u = (f.untracked_.degree() == 0 && f.untracked_.coeff(0) == 1) ? g.untracked_
                                                                              : f.untracked_ * g.untracked_;
  return ZRationalFunction(f.num_ * g.num_, f.low_ + g.low_, std::move(tracked), std::move(u));
}

ZRationalFunction operator+(const ZRationalFunction& f, const ZRationalFunction& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  Polynomial nf = f.num_, ng = g.num_;
  std::map<int, int> tracked = f.tracked_;
  for (auto [b, e] : g.tracked_) {
    int& have = tracked[b];
    if (have < e) {
      nf.mul_one_minus_tpow(b, e - have);
      have = e;
    }
  }
  for (auto [b, e] : tracked) {
    auto it = g.tracked_.find(b);
    int eg = it == g.tracked_.end() ? 0 : it->second;
    if (eg < e) ng.mul_one_minus_tpow(b, e - eg);
  }
  Polynomial u = f.untracked_;
  if (!(f.untracked_ == g.untracked_)) {
    nf = nf * g.untracked_;
    ng = ng * f.untracked_;
    u = f.untracked_ * g.untracked_;
  }
  int low = std::min(f.low_, g.low_);
  Polynomial sum = nf.shifted(f.low_ - low) + ng.shifted(g.low_ - low);
  return ZRationalFunction(std::move(sum), low, std::move(tracked), std::move(u));
}

ZRationalFunction ZRationalFunction::times_one_minus(int b) const {
  ZRationalFunction out = *this;
  auto it = out.tracked_.find(b);
  if (it != out.tracked_.end()) {
    if (--it->second == 0) out.tracked_.erase(it);
  } else {
    out.num_.mul_one_minus_tpow(b, 1);
  }
  out.normalize();
  return out;
}

ZRationalFunction ZRationalFunction::substitute_power(int c) const {
  if (c < 1) throw std::invalid_argument("substitute_power: exponent must be positive");
  auto spread = [c](const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<Rational> out(static_cast<std::size_t>(p.degree() * c) + 1);
    for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i * c)] = p.coeff(i);
    return Polynomial(std::move(out));
  };
  std::map<int, int> tracked;
  for (auto [b, e] : tracked_) tracked[b * c] = e;
  return ZRationalFunction(spread(num_), low_ * c, std::move(tracked), spread(untracked_));
}

ZRationalFunction ZRationalFunction::derivative() const {
  if (num_.is_zero()) return {};
  // f = z^low N / (Q U); f' = z^{low-1} (z N' + low N - z N Q'/Q - z N U'/U) / (Q U),
  // and Q'/Q = -sum e b z^{b-1} / (1 - z^b); bring everything over Q R U^2.
  Polynomial r = Polynomial::constant(1);
  for (auto [b, e] : tracked_) r.mul_one_minus_tpow(b, 1);
  const Polynomial& u = untracked_;
  Polynomial term = (num_.derivative().shifted(1) + num_ * Rational(low_)) * r * u;
  for (auto [b, e] : tracked_) {
    Polynomial rb = Polynomial::constant(1);
    for (auto [b2, e2] : tracked_)
      if (b2 != b) rb.mul_one_minus_tpow(b2, 1);
    term += num_ * rb.shifted(b) * u * Rational(static_cast<long>(e) * b);
  }
  term -= num_.shifted(1) * r * u.derivative();
  std::map<int, int> tracked = tracked_;
  for (auto& [b, e] : tracked) ++e;
  return ZRationalFunction(std::move(term), low_ - 1, std::move(tracked), u * u);
}

std::vector<Rational> ZRationalFunction::maclaurin(int n) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(n, 0)));
  if (num_.is_zero() || n <= 0) return c;
  if (!expandable_at_zero()) throw std::domain_error("maclaurin: pole at z = 0");
  int uv = untracked_.valuation();
  int shift = low_ - uv;
  for (int i = 0; i <= num_.degree() && i + shift < n; ++i) c[static_cast<std::size_t>(i + shift)] = num_.coeff(i);
  for (auto [b, e] : tracked_)
    for (int r = 0; r < e; ++r)
      for (int k = b; k < n; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - b)];
  if (untracked_.degree() > 0 || untracked_.coeff(0) != 1) {
    std::vector<Rational> uc(untracked_.coefficients().begin() + uv, untracked_.coefficients().end());
    c = exactalg::series_quotient(Polynomial(std::move(c)), Polynomial(std::move(uc)), n);
  }
  return c;
}

Rational ZRationalFunction::eval(const Rational& z) const {
  if (is_zero()) return 0;
  Rational den = untracked_.eval(z);
  for (auto [b, e] : tracked_) den *= power(Rational(1 - power(z, b)), e);
  if (den == 0 || (z == 0 && low_ < 0)) throw std::domain_error("ZRationalFunction::eval: pole");
  return power(z, low_) * num_.eval(z) / den;
}

}  // namespace sl2hilb::series
