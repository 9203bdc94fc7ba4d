#include "doctest.h"

#include "conepolar/catalog.hpp"
#include "conepolar/invariants.hpp"
#include "json.hpp"

using namespace conepolar;

namespace {

const Rational kTol(1, 1000000000);

Rational exact(const PolarValue& v) {
  REQUIRE(v.exact());
  return v.value.lo;
}

}  // namespace

TEST_CASE("Seshadri constants of divisors") {
  const auto p2 = load_catalog_model("P2");
  CHECK(seshadri_s(p2, "generic", {1}) == 1);
  CHECK(seshadri_s(p2, "generic", {3}) == 3);
  const auto q = load_catalog_model("P1xP1");
  CHECK(seshadri_s(q, "generic", {1, 1}) == 1);
  // the fibre through x of the other ruling is contracted by f1
  CHECK(seshadri_s(q, "generic", {1, 0}) == 0);
  CHECK(seshadri_s_via_curves(q, "generic", {1, 0}) == 0);
  CHECK_THROWS_AS(seshadri_s(q, "generic", {1, -1}), PreconditionError);
}

TEST_CASE("Seshadri constants from curves through the point") {
  CHECK(seshadri_s_via_curves(load_catalog_model("P2"), "generic", {1}) == 1);
  const auto bl = load_catalog_model("BlqP2");
  CHECK(seshadri_s_via_curves(bl, "on_curve_F", {1, 0}) == 0);
  CHECK(seshadri_s(bl, "on_curve_F", {1, 0}) == 0);
  CHECK(seshadri_s_via_curves(bl, "generic", {1, 0}) == 1);
  CHECK(seshadri_s(bl, "generic", {1, 0}) == 1);
}

TEST_CASE("Nakayama constants of divisors") {
  CHECK(nakayama_n(load_catalog_model("P2"), "generic", {1}) == 1);
  const auto bl = load_catalog_model("BlqP2");
  // n_x of a rigid curve is its multiplicity at x
  CHECK(nakayama_n(bl, "generic", {0, 1}) == 0);
  CHECK(nakayama_n(bl, "on_curve_F", {0, 1}) == 1);
  // additivity along the Zariski decomposition H + F = H + F
  CHECK(nakayama_n(bl, "on_curve_F", {1, 1}) ==
        nakayama_n(bl, "on_curve_F", {1, 0}) + nakayama_n(bl, "on_curve_F", {0, 1}));
  CHECK_THROWS_AS(nakayama_n(bl, "generic", {0, -1}), PreconditionError);
}

TEST_CASE("N_x by the exit and polar routes") {
  const auto p2 = load_catalog_model("P2");
  CHECK(exact(nakayama_N(p2, "generic", {1}, Route::exit)) == 1);
  CHECK(exact(nakayama_N(p2, "generic", {1}, Route::polar)) == 1);
  CHECK(exact(nakayama_N(p2, "generic", {5}, Route::exit)) == 5);
  const auto q = load_catalog_model("P1xP1");
  const Rational ex = exact(nakayama_N(q, "generic", {1, 0}, Route::exit));
  CHECK(exact(nakayama_N(q, "generic", {1, 0}, Route::polar)) == ex);
  CHECK_THROWS_AS(nakayama_N(q, "generic", {1, 0}, Route::divisors), ContractError);
}

TEST_CASE("S_x by all three routes") {
  const auto p2 = load_catalog_model("P2");
  for (Route r : {Route::exit, Route::polar, Route::divisors}) {
    CHECK(exact(seshadri_S(p2, "generic", {1}, r)) == 1);
  }
  const auto bl = load_catalog_model("BlqP2");
  // H sits on the boundary of Mov_1; S_x(H) vanishes exactly for x on F
  CHECK(exact(seshadri_S(bl, "on_curve_F", {1, 0}, Route::exit)) == 0);
  CHECK(exact(seshadri_S(bl, "on_curve_F", {1, 0}, Route::divisors)) == 0);
  CHECK(exact(seshadri_S(bl, "generic", {1, 0}, Route::exit)) > 0);
  const Rational s = exact(seshadri_S(bl, "generic", {2, -1}, Route::exit));
  CHECK(exact(seshadri_S(bl, "generic", {6, -3}, Route::exit)) == 3 * s);
  CHECK(global_S(bl, {1, 0}) == 0);
  CHECK(global_S(bl, {2, -1}) > 0);
}

TEST_CASE("volume-type functions on curves") {
  const Interval vh = vol_hat(load_catalog_model("P2"), {1});
  CHECK(vh.contains(1));
  CHECK(vh.width() <= kTol);
  const Interval m = M_func(load_catalog_model("P1xP1"), {1, 1});
  CHECK(m.contains(2));
  CHECK(m.width() <= 4 * kTol);
}

TEST_CASE("M is bounded by vol-hat on movable classes") {
  for (const auto& e : list_catalog()) {
    const auto model = load_model(e.json_text);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      const RationalVector a = random_point(model.mov_curves, rng);
      const Interval m = M_func(model, a);
      const Interval v = vol_hat(model, a);
      INFO(model.name << " " << a.str());
      CHECK(m.lo <= v.hi);
    }
  }
}

TEST_CASE("the vanishing locus on the blow-up of the plane at a point") {
  const auto bl = load_catalog_model("BlqP2");
  const auto v = vanishing_locus(bl, {1, 0}, {"F"});
  CHECK(v.is_boundary_mov);
  CHECK(v.M_positive);
  CHECK(v.zero_profiles == std::vector<std::string>{"on_curve_F"});
  CHECK(v.divisorial_enk == std::vector<std::string>{"F"});
  CHECK(v.holds());
  CHECK_THROWS_AS(vanishing_locus(load_catalog_model("BlpP3"), {1, 0}), UnsupportedError);
}

TEST_CASE("all theorem checks pass on the blow-up of the plane at a point") {
  const auto bl = load_catalog_model("BlqP2");
  const CheckOptions o{60, 7};
  for (const auto& r : run_suite(bl, o)) {
    INFO(r.profile << " " << r.check << " " << (r.witnesses.empty() ? "" : r.witnesses.front()));
    CHECK(r.status == CheckStatus::pass);
  }
  for (const auto& p : bl.profiles) {
    for (const auto& r : {check_route_agreement(bl, p.name, o), check_self_duality(bl, p.name, o),
                          check_hconc_invariants(bl, p.name, o), check_basic_inequalities(bl, p.name, o)}) {
      INFO(r.profile << " " << r.check << " " << (r.witnesses.empty() ? "" : r.witnesses.front()));
      CHECK(r.status == CheckStatus::pass);
    }
  }
}

TEST_CASE("non-applicable checks are skipped on the threefold") {
  const auto m = load_catalog_model("BlpP3");
  const CheckOptions o{10, 1};
  CHECK(check_theorem_C(m, o).status == CheckStatus::skip);
  CHECK(check_zariski_additivity(m, "generic", o).status == CheckStatus::skip);
  CHECK(check_self_duality(m, "generic", o).status == CheckStatus::skip);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  const auto m = load_catalog_model("P1xP1");
  const CheckOptions o{20, 42};
  const std::string a = report_json(run_suite(m, o));
  const std::string b = report_json(run_suite(m, o));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  REQUIRE(j.is_array());
  CHECK(j.size() == 8);
  for (const auto& r : j) {
    for (const char* key : {"model", "profile", "check", "status", "samples", "witnesses", "values"}) {
      CHECK(r.contains(key));
    }
  }
  CHECK(j[0]["model"] == "P1xP1");
  const std::string table = report_table(run_suite(m, o));
  CHECK(table.find("theorem_A") != std::string::npos);
}

TEST_CASE("a failing check lists witnesses") {
  CheckReport r;
  for (int i = 0; i < 25; ++i) r.fail("w" + std::to_string(i));
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.witnesses.size() == 10);
  CHECK_FALSE(r.ok());
}
