#include "doctest.h"

#include "conepolar/cones.hpp"

using namespace conepolar;

namespace {

// Bl_p P^2 in the basis (H, E) for divisors and (l, l_E) for curves.
const RationalMatrix kBl{{1, 0}, {0, -1}};

PolyhedralCone nef_bl() { return PolyhedralCone::from_rays({{1, 0}, {1, -1}}, kBl.transpose()); }
PolyhedralCone eff_bl() { return PolyhedralCone::from_rays({{0, 1}, {1, -1}}, kBl.transpose()); }

}  // namespace

TEST_CASE("facets of simple cones") {
  const auto q = PolyhedralCone::from_rays({{1, 0}, {0, 1}});
  CHECK(q.facets() == std::vector<RationalVector>{{0, 1}, {1, 0}});
  const auto red = PolyhedralCone::from_rays({{1, 0}, {0, 1}, {1, 1}});
  CHECK(red.rays() == std::vector<RationalVector>{{0, 1}, {1, 0}});
  CHECK(red.facets() == std::vector<RationalVector>{{0, 1}, {1, 0}});
}

TEST_CASE("nef cone of a point blow-up of the plane") {
  // facets are the curve classes l_E = (0,1) and the strict transform of a
  // line through p, l - l_E = (1,-1)
  const auto nef = nef_bl();
  CHECK(nef.facets() == std::vector<RationalVector>{{0, 1}, {1, -1}});
  CHECK(nef.pair({1, -1}, {1, -1}) == 0);
}

TEST_CASE("dual cones") {
  const auto quad = PolyhedralCone::from_rays({{1, 0}, {0, 1}});
  CHECK(dual_cone(quad).rays() == quad.rays());
  const auto eff_curves = dual_cone(nef_bl());
  CHECK(eff_curves.rays() == std::vector<RationalVector>{{0, 1}, {1, -1}});
  CHECK(eff_curves.pairing() == kBl);
  const auto mov = dual_cone(eff_bl());
  CHECK(mov.rays() == std::vector<RationalVector>{{1, -1}, {1, 0}});
  // duality is an involution
  CHECK(dual_cone(dual_cone(nef_bl())) == nef_bl());
}

TEST_CASE("membership with witnesses") {
  const auto quad = PolyhedralCone::from_rays({{1, 0}, {0, 1}});
  CHECK(membership(quad, {1, 1}).status == MembershipStatus::interior);
  const auto b = membership(nef_bl(), {1, -1});
  CHECK(b.status == MembershipStatus::boundary);
  CHECK(*b.witness == RationalVector{1, -1});
  const auto o = membership(nef_bl(), {1, -2});
  CHECK(o.status == MembershipStatus::outside);
  CHECK(*o.witness == RationalVector{1, -1});
  CHECK(nef_bl().pair(*o.witness, {1, -2}) == -1);
}

TEST_CASE("exit parameters") {
  const auto quad = PolyhedralCone::from_rays({{1, 0}, {0, 1}});
  CHECK(*exit_parameter(quad, {1, 1}, {0, -1}) == 1);
  CHECK_FALSE(exit_parameter(quad, {1, 0}, {1, 1}).has_value());
  CHECK(*exit_parameter(nef_bl(), {1, 0}, {0, -1}) == 1);
  CHECK(*exit_parameter(quad, {3, 0}, {-1, 0}) == 3);
  CHECK_THROWS_AS(exit_parameter(quad, {-1, 0}, {1, 0}), PreconditionError);
}

TEST_CASE("lower-dimensional cones carry equations") {
  const auto c = PolyhedralCone::from_rays({{1, 0, 0}, {0, 1, 0}});
  CHECK(c.dimension() == 2);
  CHECK(c.equations().size() == 1);
  CHECK(c.contains(RationalVector{2, 3, 0}));
  CHECK_FALSE(c.contains(RationalVector{2, 3, 1}));
  CHECK(membership(c, {1, 1, 0}).status == MembershipStatus::interior);
  // leaving the span stops immediately
  CHECK(*exit_parameter(c, {1, 1, 0}, {0, 0, 1}) == 0);
  CHECK_THROWS_AS(dual_cone(c), ContractError);
}

TEST_CASE("a cone with a line is rejected") {
  CHECK_THROWS_AS(PolyhedralCone::from_rays({{1, 0}, {-1, 0}, {0, 1}}), ContractError);
  CHECK_THROWS_AS(PolyhedralCone::from_rays({{1, 0}}, RationalMatrix{{1, 1}, {1, 1}}), ContractError);
}

TEST_CASE("from_facets inverts from_rays") {
  const auto c = PolyhedralCone::from_rays({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
  const auto d = PolyhedralCone::from_facets(c.facets(), 3);
  CHECK(d.rays() == c.rays());
  CHECK(c.contains(c.interior_point()));
  CHECK(membership(c, c.interior_point()).status == MembershipStatus::interior);
}

TEST_CASE("double description on random simplicial cones") {
  // the rays of a cone generated by independent vectors are those vectors
  const std::vector<RationalVector> gens = {{1, 2, 0}, {0, 1, 3}, {2, 0, 1}};
  const auto c = PolyhedralCone::from_rays(gens);
  CHECK(c.rays().size() == 3);
  for (const auto& f : c.facets()) {
    int tight = 0;
    for (const auto& g : gens) {
      CHECK(c.pair(f, g) >= 0);
      if (c.pair(f, g) == 0) ++tight;
    }
    CHECK(tight == 2);
  }
}
