#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace upareto {

// Exact arithmetic everywhere: probabilities and counts are arbitrary
// precision rationals kept in lowest terms with positive denominator
// (cpp_rational maintains that canonical form).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3/5", "0.6", or "2" into an exact rational. Decimal strings
/// convert exactly ("0.6" -> 3/5). Throws ValidationError on malformed input.
Rational parse_rational(std::string_view text);

/// Renders a rational as a reduced fraction, always with an explicit
/// denominator: 2/5 -> "2/5", 1 -> "1/1".
std::string fraction_string(const Rational& value);

inline BigInt rational_numerator(const Rational& value) {
  return boost::multiprecision::numerator(value);
}

inline BigInt rational_denominator(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

/// b^e for nonnegative integer exponents.
BigInt bigint_pow(const BigInt& base, int exponent);

}  // namespace upareto
