#include "ghgd/numeric.hpp"

#include <stdexcept>

namespace ghgd {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt pow10(std::int64_t exponent) { return ipow(10, static_cast<std::uint64_t>(exponent)); }

}  // namespace

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  if (exponent == 0) return 1;
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::string rational_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string decimal_string(const Rational& value, int digits) {
  if (digits < 1) throw std::invalid_argument("decimal_string: digits must be >= 1");
  if (value == 0) return "0";

  BigInt num = numerator(value);
  BigInt den = denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  // Decimal exponent e with 10^e <= num/den < 10^(e+1). Start from the digit
  // count difference, then correct by at most one in each direction.
  auto compare_with_pow10 = [&](std::int64_t e) {
    if (e >= 0) return num.compare(den * pow10(e));
    return (num * pow10(-e)).compare(den);
  };
  std::int64_t exponent =
      static_cast<std::int64_t>(num.str().size()) - static_cast<std::int64_t>(den.str().size());
  if (compare_with_pow10(exponent) < 0) --exponent;
  if (compare_with_pow10(exponent + 1) >= 0) ++exponent;

  // q = round-half-even(num/den * 10^(digits-1-exponent)): `digits` digits.
  const std::int64_t shift = digits - 1 - exponent;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0) {
    scaled_num *= pow10(shift);
  } else {
    scaled_den *= pow10(-shift);
  }
  BigInt q = scaled_num / scaled_den;
  const BigInt remainder = scaled_num % scaled_den;
  const int tie = BigInt(remainder * 2).compare(scaled_den);
  if (tie > 0 || (tie == 0 && q % 2 != 0)) ++q;
  if (q == pow10(digits)) {  // rounding carried into a new leading digit
    q /= 10;
    ++exponent;
  }

  std::string mantissa = q.str();
  std::string out;
  if (exponent >= 0 && exponent < 15) {
    if (exponent + 1 >= static_cast<std::int64_t>(mantissa.size())) {
      out = mantissa + std::string(exponent + 1 - mantissa.size(), '0');
    } else {
      out = mantissa.substr(0, exponent + 1) + "." + mantissa.substr(exponent + 1);
    }
  } else if (exponent < 0 && exponent >= -4) {
    out = "0." + std::string(-exponent - 1, '0') + mantissa;
  } else {
    out = mantissa.substr(0, 1);
    if (mantissa.size() > 1) out += "." + mantissa.substr(1);
    // strip before appending the exponent
    if (out.find('.') != std::string::npos) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
    out += "e" + std::to_string(exponent);
    return (negative ? "-" : "") + out;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return (negative ? "-" : "") + out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace ghgd
