#include "conepolar/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace conepolar {

namespace catalog_data {
const std::vector<std::pair<std::string_view, std::string_view>>& entries();
}

namespace {

CatalogEntry make_entry(std::string id, std::string path, std::string text) {
  CatalogEntry e;
  e.id = std::move(id);
  e.json_path = std::move(path);
  e.json_text = std::move(text);
  // cheap metadata read; full validation happens in load_model
  VarietyModel m = load_model(e.json_text);
  e.provenance_note = m.provenance;
  e.expected_values = m.golden;
  return e;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ModelError(p.string() + ": cannot open model file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::string, std::string>> raw_entries() {
  std::vector<std::pair<std::string, std::string>> out;
  if (const char* dir = std::getenv("CONEPOLAR_CATALOG_DIR"); dir && *dir) {
    std::error_code ec;
    for (const auto& f : std::filesystem::directory_iterator(dir, ec)) {
      if (f.path().extension() == ".json") out.emplace_back(f.path().stem().string(), f.path().string());
    }
    if (ec) throw ModelError(std::string(dir) + ": cannot read catalog directory (" + ec.message() + ")");
  } else {
    for (const auto& [id, text] : catalog_data::entries()) out.emplace_back(std::string(id), "");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string text_of(const std::string& id, const std::string& path) {
  if (!path.empty()) return read_file(path);
  for (const auto& [eid, text] : catalog_data::entries()) {
    if (eid == id) return std::string(text);
  }
  throw ContractError("unknown catalog model '" + id + "'");
}

}  // namespace

std::vector<CatalogEntry> list_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& [id, path] : raw_entries()) {
    try {
      out.push_back(make_entry(id, path, text_of(id, path)));
    } catch (const ModelError& e) {
      throw ModelError("catalog " + id + ": " + e.what());
    }
  }
  return out;
}

VarietyModel load_catalog_model(const std::string& id_or_path) {
  for (const auto& [id, path] : raw_entries()) {
    if (id == id_or_path) {
      try {
        return load_model(text_of(id, path));
      } catch (const ModelError& e) {
        throw ModelError("catalog " + id + ": " + e.what());
      }
    }
  }
  if (std::filesystem::is_regular_file(id_or_path)) return load_model_file(id_or_path);
  std::string known;
  for (const auto& [id, path] : raw_entries()) known += (known.empty() ? "" : ", ") + id;
  throw ContractError("unknown model '" + id_or_path + "' (catalog: " + known + ")");
}

CheckReport golden_run(const VarietyModel& m, const Rational& tol) {
  CheckReport r;
  r.model = m.name;
  r.profile = "*";
  r.check = "golden";
  std::size_t enclosures = 0;
  for (const auto& g : m.golden) {
    const std::string what = g.op + "(" + g.profile + ", " + g.cls.str() + ")";
    try {
      const PolarOptions opt{tol};
      std::optional<Rational> exact;
      std::optional<Interval> enclosure;
      if (g.op == "vol") {
        exact = volume(m, g.cls);
      } else if (g.op == "volhat") {
        enclosure = vol_hat(m, g.cls, opt);
      } else if (g.op == "M") {
        enclosure = M_func(m, g.cls, opt);
      } else {
        LocalInvariants inv(m, g.profile, opt);
        if (g.op == "s") {
          exact = inv.s(g.cls);
        } else if (g.op == "s_curves") {
          exact = inv.s_via_curves(g.cls);
        } else if (g.op == "n") {
          exact = inv.n(g.cls);
        } else if (g.op == "N" || g.op == "S") {
          const PolarValue ex = g.op == "N" ? inv.N(g.cls, Route::exit) : inv.S(g.cls, Route::exit);
          const PolarValue po = g.op == "N" ? inv.N(g.cls, Route::polar) : inv.S(g.cls, Route::polar);
          exact = ex.value.lo;
          if (!po.value.contains(ex.value.lo) || po.value.width() > tol) {
            r.fail(what + ": polar route " + po.value.str() + " disagrees with exit route " + ex.value.lo.str());
          }
        } else if (g.op == "S_divisors") {
          exact = inv.S(g.cls, Route::divisors).value.lo;
        } else {
          r.fail(what + ": unknown operation");
          continue;
        }
      }
      ++r.samples;
      if (exact && *exact != g.expected) {
        r.fail(what + ": expected " + g.expected.str() + ", got " + exact->str());
      }
      if (enclosure) {
        ++enclosures;
        if (!enclosure->contains(g.expected) || enclosure->width() > tol) {
          r.fail(what + ": expected " + g.expected.str() + ", got " + enclosure->str());
        }
      }
    } catch (const std::exception& e) {
      r.fail(what + ": error: " + e.what());
    }
  }
  r.value("values", std::to_string(r.samples));
  r.value("enclosures", std::to_string(enclosures));
  return r;
}

CheckReport golden_run(const CatalogEntry& entry, const Rational& tol) {
  return golden_run(load_model(entry.json_text), tol);
}

}  // namespace conepolar
