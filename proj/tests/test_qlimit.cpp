#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gcwe/qlimit.hpp"

using namespace gcwe;
using namespace gcwe::qlimit;

TEST_CASE("QValue domain") {
  CHECK_THROWS_AS(QValue(0.0), std::invalid_argument);
  CHECK_THROWS_AS(QValue(1.0), std::invalid_argument);
  CHECK_THROWS_AS(QValue(-0.5), std::invalid_argument);
  CHECK_NOTHROW(QValue(0.5));
}

TEST_CASE("q-bracket values") {
  const QValue q(0.5);
  CHECK(q_number(0, q) == 0.0);
  CHECK(q_number(1, q) == doctest::Approx(1.0));
  // (0.25 - 4) / (0.5 - 2)
  CHECK(q_number(2, q) == doctest::Approx(2.5));
}

TEST_CASE("q-bracket antisymmetry") {
  const QValue q(0.37);
  for (double x : {0.5, 1.0, 1.5, 2.0, 3.25, 4.0}) {
    CHECK(q_number(x, q) == doctest::Approx(-q_number(-x, q)));
  }
}

TEST_CASE("q to 1 recovers the integer") {
  const QValue q(1.0 - 1e-6);
  for (int x = 1; x <= 5; ++x) {
    CHECK(std::abs(q_number(x, q) / x - 1.0) < 1e-4);
  }
}

TEST_CASE("f coefficient") {
  const QValue q(0.5);
  CHECK(f_coefficient(HalfInt::from_twice(1), HalfInt::from_twice(1),
                      Direction::raising, q) == 0.0);
  CHECK(f_coefficient(HalfInt::from_twice(1), HalfInt::from_twice(-1),
                      Direction::raising, q) == doctest::Approx(1.0));
  CHECK_THROWS_AS(f_coefficient(HalfInt::from_twice(1), HalfInt::from_twice(3),
                                Direction::raising, QValue(0.5)),
                  std::domain_error);

  // F+(3/2,1/2) ~ q^-1 at small q
  const QValue small(1e-4);
  const double ratio = f_coefficient(HalfInt::from_twice(3), HalfInt::from_twice(1),
                                     Direction::raising, small) /
                       1e4;
  CHECK(std::abs(ratio - 1.0) < 1e-6);
}

TEST_CASE("limit report at q = 1e-4") {
  const auto report = limit_checks(QValue(1e-4), 4, HalfInt(2));
  CHECK(report.entries.size() > 0);
  for (const auto& e : report.entries) {
    // The only O(q) entry is the Casimir ratio at j = 1/2; everything else
    // deviates at O(q^2).
    if (e.quantity == "[j][j+1] / q^-(2j-1), j=1/2") {
      CHECK(e.deviation < 2e-4);
      CHECK(e.deviation > 1e-5);
    } else {
      CHECK(e.deviation < 1e-6);
    }
  }
}

TEST_CASE("ratios converge monotonically as q decreases") {
  const auto coarse = limit_checks(QValue(1e-2), 4, HalfInt(2));
  const auto mid = limit_checks(QValue(1e-3), 4, HalfInt(2));
  const auto fine = limit_checks(QValue(1e-4), 4, HalfInt(2));
  REQUIRE(coarse.entries.size() == mid.entries.size());
  REQUIRE(mid.entries.size() == fine.entries.size());
  for (std::size_t i = 0; i < coarse.entries.size(); ++i) {
    CHECK(coarse.entries[i].deviation >= mid.entries[i].deviation);
    CHECK(mid.entries[i].deviation >= fine.entries[i].deviation);
  }
}
