#include "doctest.h"

#include "lagrangelab/errors.hpp"
#include "lagrangelab/exact.hpp"

using namespace lagrangelab;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK(to_string(Rational(-3, 9)) == "-1/3");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK_THROWS_AS((void)parse_rational("1.5"), Error);
  CHECK_THROWS_AS((void)parse_rational("1/0"), Error);
  CHECK_THROWS_AS((void)parse_rational(""), Error);
}

TEST_CASE("gcd helpers") {
  CHECK(gcd(Integer(-12), Integer(18)) == 6);
  CHECK(lcm(Integer(4), Integer(6)) == 12);
  IntVector v{Integer(0), Integer(-6), Integer(9)};
  CHECK(gcd_of(v) == 3);
  CHECK(gcd_of(IntVector{}) == 0);
  CHECK(primitive(v) == IntVector{0, -2, 3});
  CHECK(primitive(IntVector{0, 0}) == IntVector{0, 0});
}

TEST_CASE("clearing denominators") {
  RatVector v{Rational(1, 2), Rational(-2, 3), Rational(0)};
  CHECK(clear_denominators(v) == IntVector{3, -4, 0});
  CHECK(is_integral(Rational(4, 2)));
  CHECK_FALSE(is_integral(Rational(1, 3)));
  CHECK(sign(Rational(-1, 5)) == -1);
}
