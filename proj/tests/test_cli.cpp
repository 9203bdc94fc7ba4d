#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "conepolar/cli.hpp"
#include "json.hpp"

using namespace conepolar;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("eval shows every route of S") {
  const Run r = run({"eval", "--model", "P2", "--profile", "generic", "--invariant", "S", "--class", "1", "--route",
                     "all"});
  CHECK(r.code == 0);
  for (const char* route : {"exit", "polar", "divisors"}) CHECK(has(r.out, route));
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    CHECK(line.substr(line.find_last_not_of(' ')) == "1");
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("eval with JSON output") {
  const Run r = run({"eval", "--model", "BlqP2", "--profile", "on_curve_F", "--invariant", "S", "--class", "1,0",
                     "--route", "all", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["values"]["exit"] == "0");
  CHECK(j[0]["values"]["divisors"] == "0");
  CHECK(j[0]["status"] == "PASS");
}

TEST_CASE("eval of the polar volume functions") {
  const Run r = run({"eval", "--model", "P1xP1", "--invariant", "M", "--class", "1, 1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "~ 2"));
}

TEST_CASE("suite passes on the blow-up of the plane") {
  const Run r = run({"suite", "--model", "BlqP2", "--samples", "40", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK_FALSE(has(r.out, "FAIL"));
  for (const char* c : {"theorem_A", "theorem_B", "S_le_N", "theorem_C", "fulger_bound", "n_upper_bound",
                        "n_lower_bound", "zariski_additivity"}) {
    CHECK(has(r.out, c));
  }
  // same seed, same bytes
  CHECK(run({"suite", "--model", "BlqP2", "--samples", "40", "--seed", "7"}).out == r.out);
}

TEST_CASE("dual verifies the cone dualities") {
  const Run r = run({"dual", "--model", "P2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "Nef^1* == Eff_1: PASS"));
  CHECK(has(r.out, "Eff^1* == Mov_1: PASS"));
}

TEST_CASE("golden runs every catalog model") {
  const Run r = run({"golden"});
  CHECK(r.code == 0);
  for (const char* m : {"P2", "P1xP1", "BlqP2", "Bl2P2", "BlpP3"}) CHECK(has(r.out, m));
}

TEST_CASE("export-catalog writes loadable files") {
  const auto dir = std::filesystem::temp_directory_path() / "conepolar_cli_export";
  std::filesystem::remove_all(dir);
  const Run r = run({"export-catalog", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "BlpP3.json"));
  const Run e = run({"eval", "--model", (dir / "P2.json").string(), "--invariant", "s", "--class", "2"});
  CHECK(e.code == 0);
  CHECK(has(e.out, "2"));
}

TEST_CASE("usage errors exit with 2 and name the flag") {
  Run r = run({"eval", "--model", "P9", "--invariant", "s", "--class", "1"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "--model"));
  r = run({"eval", "--model", "P2", "--profile", "elsewhere", "--invariant", "s", "--class", "1"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "--profile"));
  r = run({"eval", "--model", "P2", "--invariant", "s", "--class", "1,2"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "--class"));
  r = run({"eval", "--model", "P2", "--invariant", "s", "--class", "x"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "--class"));
  r = run({"eval", "--model", "P2", "--invariant", "N", "--class", "1", "--route", "divisors"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "--route"));
  r = run({"eval", "--model", "P2", "--invariant", "s", "--class", "1", "--class-kind", "curve"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "--class-kind"));
  r = run({"eval", "--model", "P2", "--invariant", "s", "--class", "-1"});
  CHECK(r.code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"suite", "--tol", "0"}).code == 2);
}

TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == 0); }
