#include "doctest.h"
#include "upareto/rational.hpp"
#include "upareto/types.hpp"

using namespace upareto;

TEST_SUITE("rational") {

TEST_CASE("fractions parse and reduce") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("4/10") == Rational(2, 5));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("+1/2") == Rational(1, 2));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
}

TEST_CASE("decimals parse exactly") {
  CHECK(parse_rational("0.6") == Rational(3, 5));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("0.333333333333333333333333") ==
        Rational(BigInt("333333333333333333333333"), BigInt("1000000000000000000000000")));
}

TEST_CASE("malformed numbers are rejected") {
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
  CHECK_THROWS_AS(parse_rational("/3"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1 / 2"), ValidationError);
  CHECK_THROWS_AS(parse_rational(" 1/3 "), ValidationError);
  CHECK_THROWS_AS(parse_rational("1."), ValidationError);
  CHECK_THROWS_AS(parse_rational("."), ValidationError);
}

TEST_CASE("fraction strings always carry a denominator") {
  CHECK(fraction_string(Rational(3, 5)) == "3/5");
  CHECK(fraction_string(Rational(1)) == "1/1");
  CHECK(fraction_string(Rational(0)) == "0/1");
  CHECK(fraction_string(Rational(4, 10)) == "2/5");
  CHECK(fraction_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("round trip through text is the identity") {
  const Rational values[] = {Rational(0), Rational(1), Rational(7, 12), Rational(-22, 7)};
  for (const auto& v : values) {
    CHECK(parse_rational(fraction_string(v)) == v);
  }
}

TEST_CASE("numerator and denominator are reduced parts") {
  const Rational r(6, 8);
  CHECK(rational_numerator(r) == 3);
  CHECK(rational_denominator(r) == 4);
  CHECK(rational_denominator(Rational(5)) == 1);
}

TEST_CASE("big integer powers") {
  CHECK(bigint_pow(BigInt(2), 10) == 1024);
  CHECK(bigint_pow(BigInt(5), 0) == 1);
  CHECK(bigint_pow(BigInt(10), 25) == BigInt("10000000000000000000000000"));
}

}  // TEST_SUITE
