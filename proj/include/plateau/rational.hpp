#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace plateau {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/2", "1.25" or "2e-1" style text into an exact rational.
/// Decimal input is converted digit by digit, never through a double.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is one.
std::string to_fraction_string(const Rational& value);

/// Fixed-point rendering with `precision` fractional digits, ties rounded to even.
std::string to_decimal_string(const Rational& value, int precision = 6);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

Integer pow_integer(std::uint64_t base, std::uint32_t exponent);

}  // namespace plateau
