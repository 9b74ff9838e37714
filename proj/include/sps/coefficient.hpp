#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace sps {

/// Arbitrary-precision integer; used for exponents, alphas, degrees and bounds.
using Integer = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading '-', decimal digits only, q != 0).
Rational parse_rational(std::string_view text);

/// Parses a decimal integer with optional leading '-'.
Integer parse_integer(std::string_view text);

/// Parses a decimal integer that must be >= 0.
Integer parse_natural(std::string_view text);

std::string to_string(const Integer& value);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

/// base^exponent. Throws CapExceeded when the base is not 0 or +-1 and the
/// exponent does not fit a machine word or the result would exceed 2^32 bits.
Rational pow(const Rational& base, const Integer& exponent);

/// Bit length of numerator plus bit length of denominator.
std::size_t bit_size(const Rational& value);

/// True iff the rational is 0, 1 or -1, whose powers never grow.
bool is_unit_or_zero(const Rational& value);

}  // namespace sps
