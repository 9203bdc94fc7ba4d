#pragma once

// Built-in models. The JSON files are compiled into the library; setting
// CONEPOLAR_CATALOG_DIR reads *.json from that directory instead.

#include <string>
#include <vector>

#include "conepolar/geomodel.hpp"
#include "conepolar/invariants.hpp"

namespace conepolar {

struct CatalogEntry {
  std::string id;
  /// File the entry was read from; empty for embedded data.
  std::string json_path;
  std::string json_text;
  std::string provenance_note;
  std::vector<GoldenValue> expected_values;
};

/// Entries sorted by id.
std::vector<CatalogEntry> list_catalog();

/// Catalog id, or a path to a model file.
VarietyModel load_catalog_model(const std::string& id_or_path);

/// Evaluates every expected value of the model and diffs it exactly. Values
/// only known as certified enclosures pass when the enclosure contains the
/// expected value and is narrower than tol.
CheckReport golden_run(const VarietyModel& m, const Rational& tol = Rational(1, 1000000000));
CheckReport golden_run(const CatalogEntry& entry, const Rational& tol = Rational(1, 1000000000));

}  // namespace conepolar
