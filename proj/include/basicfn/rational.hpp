#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace basicfn {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms; d must be nonzero.
Rational ratio(const Integer& n, const Integer& d);

/// Parses "p", "-p" or "p/q" exactly. Throws Error(InvalidInput) on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
/// Canonical "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& r);

/// base^exp for any integer exponent; base must be nonzero when exp < 0.
Rational pow(const Rational& base, std::int64_t exp);

/// base^(num/den) when the result is rational, nullopt otherwise.
/// Requires base > 0 and den > 0.
std::optional<Rational> rational_power(const Rational& base, const Rational& exponent);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace basicfn
