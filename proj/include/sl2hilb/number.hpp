#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2hilb {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an internal cross-check disagrees. Signals a bug, not bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(const BigInt& x);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& x);

/// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

/// x^e for any integer e. Throws std::domain_error for 0^e with e < 0.
Rational power(const Rational& x, long e);

}  // namespace sl2hilb
