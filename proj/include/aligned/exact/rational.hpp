#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace aligned::exact {

/// Arbitrary-precision rational. GMP keeps results of arithmetic in lowest
/// terms; values built from a raw numerator/denominator pair must go through
/// make_rational() or parse_rational(), which canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "N", "N/D", decimals ("0.25") and scientific notation ("1e-10").
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "N/D", or "N" when the denominator is one.
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` significant digits, e.g. "-1.495938639e-06".
std::string to_scientific(const Rational& q, int digits);

/// Fixed-point rendering with `decimals` digits after the point, rounded to
/// nearest (ties away from zero).
std::string to_fixed(const Rational& q, int decimals);

int sign(const Rational& q);
Rational abs(const Rational& q);
Rational pow(const Rational& q, unsigned exponent);
double to_double(const Rational& q);

/// Exact value of a finite double.
Rational from_double(double value);

/// 2^exponent (exponent may be negative).
Rational pow2(long exponent);

}  // namespace aligned::exact
