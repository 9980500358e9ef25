#include <doctest.h>

#include "tropmod/rational.hpp"

using tropmod::ExtRational;
using tropmod::Rational;
using tropmod::ValidationError;

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("2/6") == Rational(1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("1/3").str() == "1/3");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("0.5"), ValidationError);
  CHECK_THROWS_AS(Rational::parse(""), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/"), ValidationError);
}

TEST_CASE("rational arithmetic and comparison") {
  Rational half(1, 2), third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half > third);
  CHECK((half + half) == Rational(1));
  CHECK((half + half + half - Rational(3, 2)).sign() == 0);
}

TEST_CASE("extended rationals absorb infinity") {
  ExtRational inf = ExtRational::infinity();
  ExtRational one{Rational(1)};
  CHECK((inf + one).is_infinite());
  CHECK((one + one) == ExtRational(Rational(2)));
  CHECK(one < inf);
  CHECK_FALSE(inf < one);
  CHECK_FALSE(inf < inf);
  CHECK(inf == ExtRational::infinity());
  CHECK(ExtRational::parse("inf").is_infinite());
  CHECK(ExtRational::parse("3/2") == ExtRational(Rational(3, 2)));
  CHECK(inf.str() == "inf");
}
