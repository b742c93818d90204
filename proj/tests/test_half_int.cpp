#include <doctest.h>

#include "gcwe/half_int.hpp"

using gcwe::HalfInt;
using gcwe::Rational;

TEST_CASE("half-integer arithmetic is exact") {
  const HalfInt three_halves = HalfInt::from_twice(3);
  const HalfInt one(1);
  CHECK(three_halves + three_halves == HalfInt(3));
  CHECK(three_halves - one == HalfInt::from_twice(1));
  CHECK(-three_halves == HalfInt::from_twice(-3));
  CHECK(three_halves.abs() == three_halves);
  CHECK((-three_halves).abs() == three_halves);
  CHECK(one < three_halves);
  CHECK(three_halves.value() == doctest::Approx(1.5));
}

TEST_CASE("parity") {
  CHECK(HalfInt(2).is_integer());
  CHECK_FALSE(HalfInt::from_twice(3).is_integer());
  CHECK(HalfInt::from_twice(3).same_parity(HalfInt::from_twice(-1)));
  CHECK_FALSE(HalfInt::from_twice(3).same_parity(HalfInt(1)));
}

TEST_CASE("rendering") {
  CHECK(HalfInt(0).str() == "0");
  CHECK(HalfInt(2).str() == "2");
  CHECK(HalfInt::from_twice(3).str() == "3/2");
  CHECK(HalfInt::from_twice(-1).str() == "-1/2");
}

TEST_CASE("parsing") {
  CHECK(HalfInt::parse("3/2") == HalfInt::from_twice(3));
  CHECK(HalfInt::parse("-1/2") == HalfInt::from_twice(-1));
  CHECK(HalfInt::parse("2") == HalfInt(2));
  CHECK(HalfInt::parse("+1") == HalfInt(1));
  CHECK(HalfInt::parse("0") == HalfInt(0));
  CHECK_FALSE(HalfInt::parse(""));
  CHECK_FALSE(HalfInt::parse("x"));
  CHECK_FALSE(HalfInt::parse("1/3"));
  CHECK_FALSE(HalfInt::parse("3/"));
}

TEST_CASE("str/parse round-trips over a range") {
  for (int t = -20; t <= 20; ++t) {
    const HalfInt h = HalfInt::from_twice(t);
    CHECK(HalfInt::parse(h.str()) == h);
  }
}

TEST_CASE("rational reduction") {
  CHECK(Rational::reduced(3, 4).str() == "3/4");
  CHECK(Rational::reduced(8, 4).str() == "2");
  CHECK(Rational::reduced(0, 4) == Rational{0, 1});
  CHECK(Rational::reduced(-6, 4).str() == "-3/2");
  CHECK(Rational::reduced(6, -4).str() == "-3/2");
}
