#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pekt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds p/q in lowest terms with a positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

BigInt factorial(unsigned n);

}  // namespace pekt
