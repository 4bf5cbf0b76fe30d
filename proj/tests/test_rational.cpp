#include <doctest.h>

#include <climits>
#include <sstream>

#include "dbracket/errors.hpp"
#include "dbracket/rational.hpp"

using dbracket::Rational;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5).to_exact_string() == "0/1");
  CHECK(Rational(6, 4).to_exact_string() == "3/2");
  CHECK(Rational(-4, 2).to_string() == "-2");
}

TEST_CASE("rational arithmetic") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a > b);
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("overflowing the machine word falls back to big integers") {
  const Rational big(LONG_MAX);
  const Rational sq = big * big;
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(sq.numerator() == mpz_class(LONG_MAX) * mpz_class(LONG_MAX));

  Rational acc(1, LONG_MAX);
  for (int i = 0; i < 5; ++i) acc *= Rational(1, LONG_MAX - i);
  CHECK(acc.sign() == 1);
  Rational back = acc;
  for (int i = 0; i < 5; ++i) back *= Rational(LONG_MAX - i);
  CHECK(back == Rational(1, LONG_MAX));
}

TEST_CASE("parsing exact strings") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-7/14") == Rational(-1, 2));
  CHECK(Rational::parse("123456789012345678901234567890/2").numerator() ==
        mpz_class("61728394506172839450617283945"));
  CHECK_THROWS_AS(Rational::parse("1/0"), dbracket::ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), dbracket::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), dbracket::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), dbracket::ParseError);

  std::ostringstream os;
  os << Rational(-5, 3);
  CHECK(os.str() == "-5/3");
}
