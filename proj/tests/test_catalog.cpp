#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "conepolar/catalog.hpp"

using namespace conepolar;

TEST_CASE("the catalog ships five models") {
  const auto entries = list_catalog();
  std::vector<std::string> ids;
  for (const auto& e : entries) ids.push_back(e.id);
  CHECK(ids == std::vector<std::string>{"Bl2P2", "BlpP3", "BlqP2", "P1xP1", "P2"});
  for (const auto& e : entries) {
    CHECK_FALSE(e.provenance_note.empty());
    CHECK_FALSE(e.expected_values.empty());
    // every expected value names its oracle
    for (const auto& g : e.expected_values) {
      INFO(e.id << " " << g.op << " " << g.cls.str());
      CHECK((g.note.find("DERIVED") != std::string::npos || g.note.find("TRIVIAL") != std::string::npos));
    }
  }
}

TEST_CASE("golden values match exactly") {
  for (const auto& e : list_catalog()) {
    const auto r = golden_run(e);
    INFO(e.id << ": " << (r.witnesses.empty() ? "" : r.witnesses.front()));
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.samples == e.expected_values.size());
  }
}

TEST_CASE("specific golden entries") {
  const auto p2 = load_catalog_model("P2");
  CHECK(seshadri_s(p2, "generic", {1}) == 1);
  const auto bl = load_catalog_model("BlqP2");
  CHECK(seshadri_S(bl, "on_curve_F", {1, 0}).value.lo == 0);
  CHECK(M_func(load_catalog_model("P1xP1"), {1, 1}).contains(2));
}

TEST_CASE("a wrong expected value is reported with both values") {
  auto m = load_catalog_model("P2");
  REQUIRE_FALSE(m.golden.empty());
  m.golden.resize(1);
  m.golden[0].expected = m.golden[0].expected + 1;
  const auto r = golden_run(m);
  CHECK(r.status == CheckStatus::fail);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].find("expected") != std::string::npos);
  CHECK(r.witnesses[0].find("got") != std::string::npos);
}

TEST_CASE("unknown models") {
  CHECK_THROWS_AS(load_catalog_model("P7"), ContractError);
}

TEST_CASE("the catalog directory can be overridden") {
  const auto dir = std::filesystem::temp_directory_path() / "conepolar_catalog_override";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "Plane.json");
    for (const auto& e : list_catalog()) {
      if (e.id == "P2") f << e.json_text;
    }
  }
  setenv("CONEPOLAR_CATALOG_DIR", dir.string().c_str(), 1);
  const auto entries = list_catalog();
  unsetenv("CONEPOLAR_CATALOG_DIR");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].id == "Plane");
  CHECK(entries[0].json_path == (dir / "Plane.json").string());
}
