#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ghgd {

// All counts are exact arbitrary-precision integers and all probabilities
// exact rationals. Nothing in the counting/moment paths ever rounds.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^exponent with the convention 0^0 = 1.
BigInt ipow(const BigInt& base, std::uint64_t exponent);

// Canonical "num/den" form of a reduced rational, e.g. "1/3", "-2/1", "0/1".
std::string rational_string(const Rational& value);

// Inverse of rational_string. Also accepts a bare integer ("4" == "4/1").
Rational rational_from_string(const std::string& text);

// Decimal approximation with `digits` significant digits, round half to even.
// Fixed notation while the leading digit sits in [1e-4, 1e15), scientific
// otherwise. Trailing zeros are stripped. Deterministic: pure integer math.
std::string decimal_string(const Rational& value, int digits = 12);

double to_double(const Rational& value);

}  // namespace ghgd
