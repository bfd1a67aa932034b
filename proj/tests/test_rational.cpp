#include <doctest.h>

#include "dikeopt/error.hpp"
#include "dikeopt/rational.hpp"

using namespace dikeopt;

TEST_SUITE_BEGIN("rational");

TEST_CASE("decimal parsing is exact") {
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("6") == Rational(6));
  CHECK(parse_rational("-4.25") == Rational(-17, 4));
  CHECK(parse_rational("123.45") == Rational(2469, 20));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("+7.") == Rational(7));
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("."), Error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1e3"), Error);
}

TEST_CASE("printing terminating decimals") {
  CHECK(to_decimal_string(Rational(6)) == "6");
  CHECK(to_decimal_string(Rational(1, 2)) == "0.5");
  CHECK(to_decimal_string(Rational(3, 20)) == "0.15");
  CHECK(to_decimal_string(Rational(1, 8)) == "0.125");
  CHECK(to_decimal_string(Rational(-17, 4)) == "-4.25");
  CHECK(to_decimal_string(Rational(0)) == "0");
}

TEST_CASE("non-terminating values print as fractions") {
  CHECK(to_decimal_string(Rational(1, 3)) == "1/3");
  CHECK(to_decimal_string(Rational(-5, 6)) == "-5/6");
  CHECK(to_fraction_string(Rational(1, 2)) == "1/2");
}

TEST_CASE("round trip through text") {
  for (long num = -12; num <= 12; ++num) {
    for (long den = 1; den <= 10; ++den) {
      Rational q(num, den);
      q.canonicalize();
      CHECK(parse_rational(to_decimal_string(q)) == q);
    }
  }
}

TEST_CASE("integrality probe") {
  CHECK(is_integral(Rational(4)));
  CHECK(is_integral(Rational(4)));
  CHECK(!is_integral(Rational(1, 2)));
}

TEST_SUITE_END();
