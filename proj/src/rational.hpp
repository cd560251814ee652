#pragma once

// Exact rational scalars. All certificate arithmetic is performed on these;
// doubles appear only at evaluation and log-comparison boundaries.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace sonc {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with q > 0. Throws Error(ParseError) otherwise.
Rational rational_from_string(const std::string& text);

// Canonical "p" or "p/q" form (q > 0, reduced).
std::string rational_to_string(const Rational& value);

Rational rational_pow(const Rational& base, unsigned long exponent);

// The exact value of a finite double (doubles are dyadic rationals).
Rational rational_from_double(double value);

// Closest rational to `value` with denominator <= max_denominator
// (continued-fraction bound, same contract as Python's limit_denominator).
Rational limit_denominator(const Rational& value, unsigned long max_denominator);
Rational limit_denominator(double value, unsigned long max_denominator);

// Exact d-th root when `value` (>= 0) is a perfect d-th power of a rational.
std::optional<Rational> exact_root(const Rational& value, unsigned long degree);

std::uint64_t factorial_u64(int n); // throws Error(DimensionTooLarge) for n > 20

} // namespace sonc
