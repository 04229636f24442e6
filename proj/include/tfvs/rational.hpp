#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace tfvs {

// Exact arbitrary-precision rational.  GMP keeps values canonical:
// gcd(|numerator|, denominator) = 1 and denominator >= 1.
using Rational = boost::multiprecision::mpq_rational;

// Renders "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

// Parses "p" or "p/q" (optional leading '-' on p).  Non-canonical input such
// as "6/4" is accepted and reduced.  Throws PreconditionError on malformed
// tokens or a zero denominator.
Rational parse_rational(const std::string& token);

} // namespace tfvs
