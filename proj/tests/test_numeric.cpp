#include "jdt/numeric.hpp"

#include "doctest.h"
#include "jdt/errors.hpp"

using namespace jdt;

TEST_CASE("rational parsing and printing round-trip") {
  CHECK(rational_str(parse_rational("5")) == "5");
  CHECK(rational_str(parse_rational("-7/3")) == "-7/3");
  CHECK(rational_str(parse_rational("+4/2")) == "2");  // normalized
  CHECK(parse_rational("0/9") == Rational(0));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("2x"), ParseError);
}

TEST_CASE("to_int enforces integrality") {
  CHECK(to_int(Rational(12)) == 12);
  CHECK_THROWS_AS(to_int(Rational(1, 2)), IntegralityError);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(12, 5) == 792);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(5, 9) == 0);
  // Pascal identity as a spot property
  for (unsigned n = 1; n < 20; ++n)
    for (unsigned k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("gcd/lcm helpers") {
  CHECK(gcd_u(12, 18) == 6);
  CHECK(gcd_u(7, 0) == 7);
  CHECK(lcm_u(4, 6) == 12);
  CHECK(lcm_u(1, 12) == 12);
}
