#include "plateau/rational.hpp"

#include <cctype>

#include "plateau/errors.hpp"

namespace plateau {
namespace {

Integer parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("expected digits in '" + std::string(whole) + "'");
  Integer out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in '" +
                       std::string(whole) + "'");
    }
    out = out * 10 + (c - '0');
  }
  return out;
}

Integer pow10(unsigned exponent) {
  Integer out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= 10;
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_digits(text.substr(0, slash), whole);
    const Integer den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (exp_text.size() > 6) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
      const auto magnitude = parse_digits(exp_text, whole).convert_to<long>();
      exponent = exp_negative ? -magnitude : magnitude;
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) throw ParseError("expected digits in '" + std::string(whole) + "'");
    }
    const Integer mantissa =
        (int_part.empty() ? Integer(0) : parse_digits(int_part, whole)) * pow10(static_cast<unsigned>(frac_part.size())) +
        (frac_part.empty() ? Integer(0) : parse_digits(frac_part, whole));
    exponent -= static_cast<long>(frac_part.size());
    value = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                          : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& value) {
  const Integer& den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int precision) {
  if (precision < 0) precision = 0;
  const bool negative = value < 0;
  const Integer num = abs(numerator(value)) * pow10(static_cast<unsigned>(precision));
  const Integer& den = denominator(value);
  Integer quotient = num / den;
  const Integer twice_rem = (num % den) * 2;
  if (twice_rem > den || (twice_rem == den && (quotient & 1) != 0)) ++quotient;

  std::string digits = quotient.str();
  if (precision > 0) {
    if (digits.size() <= static_cast<std::size_t>(precision)) {
      digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(precision), 1, '.');
  }
  if (negative && quotient != 0) digits.insert(0, 1, '-');
  return digits;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Integer pow_integer(std::uint64_t base, std::uint32_t exponent) {
  return boost::multiprecision::pow(Integer(base), exponent);
}

}  // namespace plateau
