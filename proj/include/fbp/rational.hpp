#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fbp {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Decimal expansion with `digits` fractional digits, rounded half away from zero.
std::string to_decimal(const Rational& q, int digits);
// Same, but rounded toward +infinity (useful for publishing upper bounds).
std::string to_decimal_ceil(const Rational& q, int digits);
// Rounded toward -infinity.
std::string to_decimal_floor(const Rational& q, int digits);

// Accepts "p", "p/q", and plain decimals such as "-13.818792". Throws FormatError.
Rational parse_rational(std::string_view text);

}  // namespace fbp
