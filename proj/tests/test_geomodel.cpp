#include "doctest.h"

#include <fstream>
#include <string>

#include "conepolar/catalog.hpp"
#include "conepolar/geomodel.hpp"
#include "json.hpp"

using namespace conepolar;
using nlohmann::json;

namespace {

json catalog_json(const std::string& id) {
  for (const auto& e : list_catalog()) {
    if (e.id == id) return json::parse(e.json_text);
  }
  FAIL("missing catalog entry " << id);
  return {};
}

std::string load_error(const json& j) {
  try {
    load_model(j.dump());
  } catch (const ModelError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("P2 loads with one-ray cones") {
  const auto m = load_catalog_model("P2");
  CHECK(m.rho == 1);
  CHECK(m.dim == 2);
  for (const auto* c : {&m.nef, &m.eff_div, &m.eff_curves, &m.mov_curves}) {
    CHECK(c->rays() == std::vector<RationalVector>{{1}});
  }
  CHECK(m.profile("generic").name == "generic");
  CHECK_THROWS_AS(m.profile("nowhere"), ContractError);
}

TEST_CASE("BlpP3 loads with its volume chambers") {
  const auto m = load_catalog_model("BlpP3");
  CHECK(m.dim == 3);
  CHECK(m.rho == 2);
  // vol(aH - bE) = a^3 - b^3 for 0 <= b <= a
  CHECK(volume(m, {2, -1}) == 7);
  CHECK(volume(m, {5, -2}) == 125 - 8);
  CHECK(m.top_intersection({2, -1}) == 7);
}

TEST_CASE("duality violations are load errors naming the pairing") {
  json j = catalog_json("BlqP2");
  j["eff_curves"]["rays"] = json::array({json::array({"0", "1"}), json::array({"1", "0"})});
  const std::string err = load_error(j);
  CHECK(contains(err, "Nef^1* != Eff_1"));

  json k = catalog_json("BlqP2");
  k["mov_curves"]["rays"] = json::array({json::array({"1", "0"}), json::array({"0", "1"})});
  CHECK(contains(load_error(k), "Eff^1* != Mov_1"));
}

TEST_CASE("malformed data is reported with its location") {
  json j = catalog_json("P1xP1");
  j["pairing"][0][1] = "x";
  CHECK(contains(load_error(j), "pairing[0][1]"));

  json k = catalog_json("P1xP1");
  k["nef"]["rays"][0] = json::array({"2", "0"});
  CHECK(contains(load_error(k), "nef.rays[0]"));

  json g = catalog_json("P1xP1");
  g["profiles"][0]["name"] = "somewhere";
  CHECK(contains(load_error(g), "generic"));

  json b = catalog_json("BlqP2");
  b["profiles"][0]["blowup"]["pairing"][2][2] = "1";
  CHECK(contains(load_error(b), "profiles[0].blowup.pairing"));

  json n = catalog_json("BlqP2");
  n["negative_curves"][0]["self_int"] = "-2";
  CHECK(contains(load_error(n), "negative_curves[0]"));

  json v = catalog_json("BlqP2");
  v["volume"][1]["poly"][0]["coef"] = "2";
  CHECK(contains(load_error(v), "volume"));

  CHECK(contains(load_error(json::parse("{}")), "name"));
  CHECK_THROWS_AS(load_model("{not json"), ModelError);
}

TEST_CASE("pullbacks and the exceptional classes") {
  const auto m = load_catalog_model("P2");
  const auto& y = m.profile("generic").blowup;
  CHECK(pullback_div(y, {1}) == RationalVector{1, 0});
  CHECK(pullback_curve(y, {1}) == RationalVector{1, 0});
  CHECK(exceptional_curve_class(y) == RationalVector{0, -1});
  // e = -[E] on a surface, so E.e = 1
  CHECK(pair(y.pairing, exceptional_divisor(y), exceptional_curve_class(y)) == 1);
  CHECK(pair(y.pairing, pullback_div(y, {1}), exceptional_curve_class(y)) == 0);

  const auto p3 = load_catalog_model("BlpP3");
  const auto& y3 = p3.profile("generic").blowup;
  CHECK(pullback_curve(y3, {2, 3}) == RationalVector{2, 3, 0});
  // E.e = E.E^2 = E^3 = 1 in dimension three
  CHECK(pair(y3.pairing, exceptional_divisor(y3), exceptional_curve_class(y3)) == 1);
}

TEST_CASE("Zariski decomposition on the blow-up of the plane at a point") {
  const auto m = load_catalog_model("BlqP2");
  auto z = zariski_decompose(m, {1, 0});
  CHECK(z.positive == RationalVector{1, 0});
  CHECK(z.negative_support.empty());

  z = zariski_decompose(m, {1, 1});  // H + F
  CHECK(z.positive == RationalVector{1, 0});
  REQUIRE(z.negative_support.size() == 1);
  CHECK(z.negative_support[0].label == "F");
  CHECK(z.negative_support[0].coef == 1);

  z = zariski_decompose(m, {0, 1});  // F
  CHECK(z.positive == RationalVector{0, 0});
  CHECK(z.negative() == RationalVector{0, 1});

  CHECK_THROWS_AS(zariski_decompose(m, {0, -1}), PreconditionError);
  CHECK_THROWS_AS(zariski_decompose(load_catalog_model("BlpP3"), {1, 0}), UnsupportedError);
}

TEST_CASE("Zariski decomposition with two exceptional curves") {
  const auto m = load_catalog_model("Bl2P2");
  // H + 2F1 + F2 has negative part 2F1 + F2
  const auto z = zariski_decompose(m, {1, 2, 1});
  CHECK(z.positive == RationalVector{1, 0, 0});
  CHECK(z.negative() == RationalVector{0, 2, 1});
  CHECK(z.negative_support.size() == 2);
}

TEST_CASE("volumes") {
  CHECK(volume(load_catalog_model("P2"), {3}) == 9);
  const auto bl = load_catalog_model("BlqP2");
  CHECK(volume(bl, {1, 1}) == 1);
  CHECK(volume(bl, {0, 1}) == 0);
  CHECK(volume(load_catalog_model("P1xP1"), {2, 3}) == 12);
  CHECK_THROWS_AS(volume(bl, {-1, 0}), PreconditionError);
}

TEST_CASE("curve powers") {
  // on a surface L^1 is L itself
  CHECK(curve_power(load_catalog_model("P1xP1"), {2, 3}) == RationalVector{2, 3});
  // on Bl_p P^3: (aH - bE)^2 = a^2 l - b^2 l_E, paired with H gives a^2
  const auto m = load_catalog_model("BlpP3");
  const RationalVector g = curve_power(m, {3, -1});
  CHECK(pair(m.pairing, {1, 0}, g) == 9);
  CHECK(pair(m.pairing, {3, -1}, g) == 27 - 1);
}

TEST_CASE("models can be read from files") {
  const auto dir = std::filesystem::temp_directory_path() / "conepolar_geomodel_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "p2.json";
  {
    std::ofstream f(path);
    f << catalog_json("P2").dump();
  }
  CHECK(load_model_file(path).name == "P2");
  CHECK(load_catalog_model(path.string()).name == "P2");
  CHECK_THROWS_AS(load_model_file(dir / "missing.json"), ModelError);
}
