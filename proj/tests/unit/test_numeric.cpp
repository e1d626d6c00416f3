#include <doctest.h>

#include "ghgd/numeric.hpp"

using ghgd::BigInt;
using ghgd::Rational;

TEST_CASE("ipow") {
  CHECK(ghgd::ipow(0, 0) == 1);
  CHECK(ghgd::ipow(0, 5) == 0);
  CHECK(ghgd::ipow(10, 3) == 1000);
  CHECK(ghgd::ipow(BigInt(-2), 3) == -8);
}

TEST_CASE("rational_string round-trips") {
  CHECK(ghgd::rational_string(Rational(1, 3)) == "1/3");
  CHECK(ghgd::rational_string(Rational(2)) == "2/1");
  CHECK(ghgd::rational_string(Rational(-1, 2)) == "-1/2");
  CHECK(ghgd::rational_string(Rational(0)) == "0/1");
  CHECK(ghgd::rational_from_string("7/21") == Rational(1, 3));
  CHECK(ghgd::rational_from_string("4") == Rational(4));
  CHECK(ghgd::rational_from_string("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(ghgd::rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ghgd::rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("decimal_string fixed notation") {
  CHECK(ghgd::decimal_string(Rational(0)) == "0");
  CHECK(ghgd::decimal_string(Rational(1)) == "1");
  CHECK(ghgd::decimal_string(Rational(2, 3)) == "0.666666666667");
  CHECK(ghgd::decimal_string(Rational(1, 3)) == "0.333333333333");
  CHECK(ghgd::decimal_string(Rational(1, 6)) == "0.166666666667");
  CHECK(ghgd::decimal_string(Rational(-1, 6)) == "-0.166666666667");
  CHECK(ghgd::decimal_string(Rational(1, 1000)) == "0.001");
  CHECK(ghgd::decimal_string(Rational(1000000)) == "1000000");
  // 0.04 / 0.9216
  CHECK(ghgd::decimal_string(Rational(25, 576)) == "0.0434027777778");
}

TEST_CASE("decimal_string rounds half to even") {
  CHECK(ghgd::decimal_string(Rational(25, 10), 1) == "2");
  CHECK(ghgd::decimal_string(Rational(35, 10), 1) == "4");
  CHECK(ghgd::decimal_string(Rational(15, 100), 1) == "0.2");
  CHECK(ghgd::decimal_string(Rational(25, 100), 1) == "0.2");
  CHECK(ghgd::decimal_string(Rational(125, 1000), 2) == "0.12");
  CHECK(ghgd::decimal_string(Rational(135, 1000), 2) == "0.14");
}

TEST_CASE("decimal_string scientific notation") {
  CHECK(ghgd::decimal_string(Rational(1, 100000)) == "1e-5");
  CHECK(ghgd::decimal_string(Rational(BigInt("123456789012345678"))) == "1.23456789012e17");
  CHECK(ghgd::decimal_string(Rational(1, BigInt("1000000000000000000000"))) == "1e-21");
  // carry into a new leading digit: 0.99999999999951 -> 1
  CHECK(ghgd::decimal_string(Rational(999999999999951, BigInt(1000000000000000))) == "1");
}
