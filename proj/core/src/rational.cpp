#include "upareto/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "upareto/types.hpp"

namespace upareto {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw ValidationError("not a valid rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_rational(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    const BigInt d{std::string(den)};
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) bad_rational(text);
    const BigInt scale = bigint_pow(10, static_cast<int>(frac.size()));
    const BigInt whole_part = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    value = Rational(whole_part * scale + BigInt{std::string(frac)}, scale);
  } else {
    if (!all_digits(s)) bad_rational(text);
    value = Rational(BigInt{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& value) {
  return rational_numerator(value).str() + "/" + rational_denominator(value).str();
}

BigInt bigint_pow(const BigInt& base, int exponent) {
  BigInt result = 1;
  BigInt b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace upareto
