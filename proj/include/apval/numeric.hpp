#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apval {

/// Arbitrary-precision integer. All arithmetic on these values is exact.
using Int = mpz_class;

/// Exact rational in canonical form: reduced to lowest terms, denominator
/// positive, zero represented as 0/1. Every mpq_class produced by this
/// library is canonical; `normalize` is the checked entry point.
using Rational = mpq_class;

/// Canonical reduced fraction with positive denominator.
/// Throws domain_error when den == 0.
Rational normalize(const Int& num, const Int& den);

/// Parses "p/q" or "n" (optionally signed). Throws domain_error on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` places after the point, rounded to
/// nearest (ties away from zero). Exact input, deterministic output.
std::string to_decimal_string(const Rational& q, int digits);

Int pow_int(const Int& base, unsigned long exp);

/// p^e for integer e of either sign (p != 0).
Rational pow_rational(const Int& base, long exp);

Rational abs(const Rational& q);

/// Floor of the k-th root. n >= 0, k >= 1.
Int iroot(const Int& n, unsigned long k);

/// True when n is a perfect k-th power; root receives the exact root.
bool perfect_root(const Int& n, unsigned long k, Int& root);

} // namespace apval
