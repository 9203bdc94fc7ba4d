#include "doctest.h"

#include "conepolar/lp.hpp"

using namespace conepolar;

TEST_CASE("small LP with duals") {
  // maximize x + y  s.t.  x + 2y <= 4, 3x + y <= 6
  const RationalMatrix a{{1, 2}, {3, 1}};
  const auto r = lp::maximize_leq(a, {4, 6}, {1, 1});
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.x == RationalVector{Rational(8, 5), Rational(6, 5)});
  CHECK(r.duals == RationalVector{Rational(2, 5), Rational(1, 5)});
  // strong duality
  CHECK(dot(r.duals, {4, 6}) == r.value);
}

TEST_CASE("infeasible and unbounded programs") {
  CHECK(lp::maximize_leq(RationalMatrix{{1}}, {-1}, {1}).status == lp::Status::infeasible);
  CHECK(lp::maximize_leq(RationalMatrix{{-1}}, {1}, {1}).status == lp::Status::unbounded);
  CHECK(lp::maximize_eq(RationalMatrix{{1, 1}}, {2}, {1, 0}).value == 2);
}

TEST_CASE("conic hull membership") {
  const std::vector<RationalVector> g = {{1, 0}, {1, 1}};
  CHECK(lp::in_conic_hull(g, {3, 1}));
  CHECK_FALSE(lp::in_conic_hull(g, {0, 1}));
  CHECK(lp::in_conic_hull(g, {0, 0}));
}
