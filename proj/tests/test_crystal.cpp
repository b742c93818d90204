#include <doctest.h>

#include <stdexcept>

#include "gcwe/crystal.hpp"

using namespace gcwe;

namespace {
CrystalState state(int j2, int m2) {
  return CrystalState(HalfInt::from_twice(j2), HalfInt::from_twice(m2));
}
}  // namespace

TEST_CASE("state validation") {
  CHECK_THROWS_AS(state(-1, -1), std::invalid_argument);
  CHECK_THROWS_AS(state(1, 3), std::invalid_argument);   // |m| > j
  CHECK_THROWS_AS(state(2, 1), std::invalid_argument);   // parity mismatch
  CHECK_NOTHROW(state(4, 0));
}

TEST_CASE("raising") {
  CHECK(raised(state(1, -1)) == state(1, 1));
  CHECK_FALSE(raised(state(1, 1)).has_value());
  CHECK(raised(state(4, 0)) == state(4, 2));
}

TEST_CASE("lowering") {
  CHECK(lowered(state(1, 1)) == state(1, -1));
  CHECK_FALSE(lowered(state(1, -1)).has_value());
  CHECK(lowered(*raised(state(6, -2))) == state(6, -2));
}

TEST_CASE("casimir eigenvalues") {
  CHECK(casimir_eigenvalue(state(0, 0)) == Rational{0, 1});
  CHECK(casimir_eigenvalue(state(1, 1)) == Rational{3, 4});
  CHECK(casimir_eigenvalue(state(1, -1)) == Rational{3, 4});
  CHECK(casimir_eigenvalue(state(3, 1)) == Rational{15, 4});
}

TEST_CASE("orbit structure for all j up to 4") {
  for (int j2 = 0; j2 <= 8; ++j2) {
    // inverse laws away from the boundary
    for (int m2 = -j2; m2 <= j2; m2 += 2) {
      const CrystalState s = state(j2, m2);
      if (m2 < j2) CHECK(lowered(*raised(s)) == s);
      if (m2 > -j2) CHECK(raised(*lowered(s)) == s);
    }
    // raising from the bottom visits every m once, then annihilates
    CrystalState cur = state(j2, -j2);
    const Rational cas = casimir_eigenvalue(cur);
    int visited = 1;
    while (auto next = raised(cur)) {
      cur = *next;
      ++visited;
      CHECK(casimir_eigenvalue(cur) == cas);
    }
    CHECK(visited == j2 + 1);  // 2j + 1 states
    CHECK(cur.m == cur.j);
  }
}
