#include <random>

#include "doctest.h"
#include "polycx/rational.hpp"

using polycx::Rational;

TEST_CASE("rational normalisation and text") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, -7).str() == "0");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("99999999999999999999"), polycx::RationalOverflow);
}

TEST_CASE("rational field operations agree with cross-multiplied integers") {
  // a/b op c/d compared through the numerator/denominator identities
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
  for (int t = 0; t < 500; ++t) {
    const long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    const Rational s = x + y, p = x * y;
    CHECK(s.num() * (b * d) == (a * d + c * b) * s.den());
    CHECK(p.num() * (b * d) == (a * c) * p.den());
    CHECK((x - y) + y == x);
    if (c != 0) CHECK((x / y) * y == x);
    CHECK(((x < y) == (a * d < c * b)));
    CHECK(Rational::parse(x.str()) == x);
    CHECK(std::gcd(s.num(), s.den()) == 1);
  }
}

TEST_CASE("rational floor and overflow") {
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-4).floor() == -4);
  const Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, polycx::RationalOverflow);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
