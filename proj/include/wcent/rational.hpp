#pragma once

#include <gmpxx.h>

#include <string>

namespace wcent {

/// Exact scalar type used by every module.
using Rational = mpq_class;

/// Builds a canonical rational from decimal numerator/denominator strings.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_strings(const std::string& num, const std::string& den);

std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& q);

Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace wcent
