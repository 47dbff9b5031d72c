#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zonal {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or a finite decimal like "-1.25" into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

BigInt factorial(unsigned long n);
BigInt double_factorial(long n);  // n!! with (-1)!! = 0!! = 1

}  // namespace zonal
