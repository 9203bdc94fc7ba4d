#include "doctest.h"

#include "conepolar/catalog.hpp"
#include "conepolar/hconc.hpp"
#include "conepolar/invariants.hpp"

using namespace conepolar;

namespace {

PolyhedralCone quadrant() { return PolyhedralCone::from_rays({{1, 0}, {0, 1}}); }

Polynomial poly(std::vector<Polynomial::Term> terms, std::size_t n = 2) { return Polynomial(n, std::move(terms)); }

// (c x y)^(1/2) on the quadrant
ConeFunction geometric_mean(const Rational& c = 1) {
  return ConeFunction::power_polynomial(quadrant(), {{quadrant(), poly({{{1, 1}, c}})}}, 2);
}

const Rational kTol(1, 1000000000);

}  // namespace

TEST_CASE("polynomials") {
  const Polynomial p = poly({{{2, 0}, 1}, {{0, 2}, -1}, {{1, 1}, 0}});
  CHECK(p.terms().size() == 2);
  CHECK(p.homogeneous_degree() == 2);
  CHECK(p({3, 1}) == 8);
  CHECK(p.gradient({3, 1}) == RationalVector{6, -2});
  CHECK_THROWS_AS(poly({{{2, 0}, 1}, {{1, 0}, 1}}).homogeneous_degree(), ContractError);
}

TEST_CASE("evaluation of each kind") {
  CHECK(ConeFunction::linear(quadrant(), {1, 0}).evaluate_exact({3, 7}) == 3);
  // vol(a,b) = 2ab on P1 x P1, so vol^(1/2)(2,1) = 2
  const auto v = ConeFunction::power_polynomial(quadrant(), {{quadrant(), poly({{{1, 1}, 2}})}}, 2);
  CHECK(v.evaluate({2, 1}).is_exact());
  CHECK(v.evaluate({2, 1}).lo == 2);
  const Interval irr = v.evaluate({1, 1});
  CHECK(irr.lo * irr.lo <= 2);
  CHECK(irr.hi * irr.hi >= 2);
  // s_x on Nef(P^2) from the exit parameter on the blow-up
  const RationalMatrix bl{{1, 0}, {0, -1}};
  const auto nef_p2 = PolyhedralCone::from_rays({{1}}, RationalMatrix{{1}});
  const auto nef_y = PolyhedralCone::from_rays({{1, 0}, {1, -1}}, bl);
  const auto s = ConeFunction::exit_based(nef_p2, nef_y, RationalMatrix{{1}, {0}}, {0, -1});
  CHECK(s.evaluate_exact({3}) == 3);
  CHECK(s.is_piecewise_linear());
  CHECK_THROWS_AS(s.evaluate({-1}), PreconditionError);
}

TEST_CASE("min of linear forms has the expected chambers") {
  const auto f = ConeFunction::min_of_linear(quadrant(), {{1, 0}, {0, 1}});
  CHECK(f.linear_chambers().size() == 2);
  CHECK(f.evaluate_exact({2, 5}) == 2);
  CHECK(f.breakpoint_rays().size() == 3);
}

TEST_CASE("chambers must cover the domain") {
  const auto half = PolyhedralCone::from_rays({{1, 0}, {1, 1}});
  CHECK_THROWS_AS(ConeFunction::piecewise_linear(quadrant(), {{half, {1, 0}}}), ModelError);
  const auto other = PolyhedralCone::from_rays({{1, 1}, {0, 1}});
  // the pieces disagree on the common ray (1,1)
  CHECK_THROWS_AS(ConeFunction::piecewise_linear(quadrant(), {{half, {1, 0}}, {other, {0, 2}}}), ModelError);
  const auto ok = ConeFunction::piecewise_linear(quadrant(), {{half, {0, 1}}, {other, {1, 0}}});
  CHECK(ok.evaluate_exact({3, 1}) == 1);
}

TEST_CASE("polar transform, exact path") {
  const auto x = ConeFunction::linear(quadrant(), {1, 0});
  const PolarValue p = polar_eval(x, {2, 3});
  CHECK(p.exact());
  CHECK(p.value.lo == 2);
  // same answer through the numeric machinery
  const PolarValue q = polar_eval(x, {2, 3}, PolarOptions{kTol, true});
  CHECK(q.value.contains(2));
  CHECK(q.value.width() <= kTol);
  // outside the dual cone the value is reported as 0
  const PolarValue out = polar_eval(x, {-1, 3});
  CHECK(out.outside_dual);
  CHECK(out.value.lo == 0);
}

TEST_CASE("polar transform of the geometric mean brackets the AM-GM value") {
  const PolarValue p = polar_eval(geometric_mean(), {1, 1});
  CHECK(p.value.contains(2));
  CHECK(p.value.width() <= kTol);
  // closed form 2 sqrt(ab)
  const PolarValue q = polar_eval(geometric_mean(), {1, 4});
  CHECK(q.value.contains(4));
  const PolarValue r = polar_eval(geometric_mean(), {2, 1});
  CHECK(r.value.lo <= Rational(2828427125, 1000000000));
  CHECK(r.value.hi >= Rational(2828427124, 1000000000));
}

TEST_CASE("polar of s_x on the projective plane") {
  const auto m = load_catalog_model("P2");
  LocalInvariants inv(m, "generic");
  const PolarValue n = polar_eval(inv.s_function(), {1});
  CHECK(n.exact());
  CHECK(n.value.lo == 1);
}

TEST_CASE("check_hconc accepts concave functions") {
  for (const auto& rep : check_hconc(ConeFunction::linear(quadrant(), {1, 2}), 100, 3)) CHECK(rep.passed());
  const auto m = load_catalog_model("BlqP2");
  LocalInvariants inv(m, "on_curve_F");
  for (const auto& rep : check_hconc(inv.n_function(), 500, 5)) {
    INFO(rep.property);
    CHECK(rep.passed());
    CHECK(rep.samples >= 500);
  }
  for (const auto& rep : check_hconc(geometric_mean(), 100, 9)) CHECK(rep.passed());
}

TEST_CASE("check_hconc rejects a convex function with a witness") {
  const auto f = ConeFunction::callable(
      quadrant(), [](const RationalVector& v) { return v[0] * v[0] / (v[0] + v[1]); }, "x^2/(x+y)");
  bool found = false;
  for (const auto& rep : check_hconc(f, 200, 11)) {
    if (rep.property == "superadditivity") {
      CHECK_FALSE(rep.passed());
      found = !rep.counterexamples.empty();
    } else {
      CHECK(rep.passed());
    }
  }
  CHECK(found);
  // the textbook witness: v = (1,0), w = (0,1)
  CHECK(f.evaluate_exact({1, 1}) < f.evaluate_exact({1, 0}) + f.evaluate_exact({0, 1}));
}

TEST_CASE("duality transform on a surface: H s_x = n_x and H n_x = s_x") {
  const auto m = load_catalog_model("BlqP2");
  for (const auto& p : m.profiles) {
    LocalInvariants inv(m, p.name);
    // on a surface the curve cones coincide with the divisor cones
    for (const auto& rep : check_duality_transform(inv.s_function(), inv.n_function(), 50, 2)) {
      INFO(p.name << " " << rep.property);
      CHECK(rep.passed());
    }
  }
}

TEST_CASE("double polar of the geometric mean returns it") {
  const auto f = geometric_mean();
  const auto g = ConeFunction::polar_of(f);
  for (const auto& rep : check_duality_transform(f, g, 10, 4)) {
    INFO(rep.property);
    CHECK(rep.passed());
  }
}

TEST_CASE("scaling a function scales its polar inversely") {
  // H(2f) = H(f) / 2 with 2 sqrt(xy) = sqrt(4xy)
  const auto f = geometric_mean();
  const auto f2 = geometric_mean(4);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const RationalVector w = random_point(quadrant(), rng);
    const Interval a = polar_eval(f, w).value;
    const Interval b = polar_eval(f2, w).value;
    CHECK(b.lo <= a.hi / 2 + kTol);
    CHECK(a.lo / 2 <= b.hi + kTol);
  }
}

TEST_CASE("order reversal") {
  const auto lo = ConeFunction::min_of_linear(quadrant(), {{1, 0}, {0, 1}});
  const auto rep = check_order_reversal(lo, geometric_mean(), 50, 8);
  CHECK(rep.passed());
  CHECK(rep.samples == 50);
}

TEST_CASE("random points lie in the cone") {
  const auto c = PolyhedralCone::from_rays({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) CHECK(c.contains(random_point(c, rng)));
  std::mt19937_64 a(5), b(5);
  CHECK(random_point(c, a) == random_point(c, b));
}
