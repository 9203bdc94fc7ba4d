#include "conepolar/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "conepolar/catalog.hpp"
#include "conepolar/invariants.hpp"
#include "json.hpp"

namespace conepolar {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string model;
  std::string profile = "generic";
  std::string cls;
  std::string class_kind;
  std::string invariant;
  std::string route;
  std::string tol = "1/1000000000";
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::string format = "table";
  std::string out_dir = ".";
};

Rational parse_tol(const std::string& s) {
  try {
    Rational t = Rational::parse(s);
    if (t.sign() <= 0) throw UsageError("--tol: must be positive");
    return t;
  } catch (const ContractError& e) {
    throw UsageError(std::string("--tol: ") + e.what());
  }
}

VarietyModel model_for(const std::string& id) {
  if (id.empty()) throw UsageError("--model: required");
  try {
    return load_catalog_model(id);
  } catch (const ContractError& e) {
    throw UsageError(std::string("--model: ") + e.what());
  }
}

std::vector<VarietyModel> models_for(const std::string& id) {
  std::vector<VarietyModel> out;
  if (!id.empty()) {
    out.push_back(model_for(id));
    return out;
  }
  for (const auto& e : list_catalog()) out.push_back(load_model(e.json_text));
  return out;
}

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(15) << r.to_double();
  return os.str();
}

std::string show_value(const Interval& v) {
  if (v.is_exact()) return v.lo.str();
  return v.str() + " ~ " + decimal(v.mid());
}

void emit(const std::vector<CheckReport>& reports, const Config& c, std::ostream& out) {
  out << (c.format == "json" ? report_json(reports) : report_table(reports));
}

bool all_ok(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
}

int cmd_eval(const Config& c, std::ostream& out) {
  static const std::vector<std::string> divisor_side = {"s", "n"};
  static const std::vector<std::string> curve_side = {"N", "S", "volhat", "M"};
  const bool div = std::find(divisor_side.begin(), divisor_side.end(), c.invariant) != divisor_side.end();
  const bool curve = std::find(curve_side.begin(), curve_side.end(), c.invariant) != curve_side.end();
  if (!div && !curve) throw UsageError("--invariant: expected one of s, n, N, S, volhat, M");
  if (!c.class_kind.empty() && c.class_kind != (div ? "div" : "curve")) {
    throw UsageError("--class-kind: invariant " + c.invariant + " takes a " + (div ? "divisor" : "curve") +
                     " class");
  }
  const VarietyModel m = model_for(c.model);
  if (c.cls.empty()) throw UsageError("--class: required");
  RationalVector cls;
  try {
    cls = RationalVector::parse(c.cls);
  } catch (const ContractError& e) {
    throw UsageError(std::string("--class: ") + e.what());
  }
  if (cls.size() != m.rho) {
    throw UsageError("--class: model " + m.name + " has Picard rank " + std::to_string(m.rho) + ", got " +
                     std::to_string(cls.size()) + " coordinates");
  }
  const bool global = c.invariant == "volhat" || c.invariant == "M";
  if (!global) {
    try {
      (void)m.profile(c.profile);
    } catch (const ContractError& e) {
      throw UsageError(std::string("--profile: ") + e.what());
    }
  }

  std::vector<std::string> routes;
  const std::string route = c.route.empty() ? (global ? "polar" : "exit") : c.route;
  if (c.invariant == "S") {
    routes = route == "all" ? std::vector<std::string>{"exit", "polar", "divisors"} : std::vector<std::string>{route};
  } else if (c.invariant == "N") {
    if (route == "divisors") throw UsageError("--route: divisors is only valid with --invariant S");
    routes = route == "all" ? std::vector<std::string>{"exit", "polar"} : std::vector<std::string>{route};
  } else if (global) {
    if (route != "polar" && route != "all") throw UsageError("--route: " + c.invariant + " is a polar transform");
    routes = {"polar"};
  } else {
    if (route == "divisors") throw UsageError("--route: divisors is only valid with --invariant S");
    if (route == "polar") throw UsageError("--route: " + c.invariant + " is computed by the exit route");
    routes = {"exit"};
  }

  const PolarOptions opt{parse_tol(c.tol)};
  CheckReport r;
  r.model = m.name;
  r.profile = global ? "*" : c.profile;
  r.check = "eval " + c.invariant + " " + cls.str();
  std::vector<Interval> values;
  for (const auto& rt : routes) {
    Interval v;
    if (c.invariant == "volhat") {
      v = vol_hat(m, cls, opt);
    } else if (c.invariant == "M") {
      v = M_func(m, cls, opt);
    } else {
      LocalInvariants inv(m, c.profile, opt);
      const Route rr = *parse_route(rt);
      if (c.invariant == "s") v = Interval::point(inv.s(cls));
      if (c.invariant == "n") v = Interval::point(inv.n(cls));
      if (c.invariant == "N") v = inv.N(cls, rr).value;
      if (c.invariant == "S") v = inv.S(cls, rr).value;
    }
    values.push_back(v);
    r.value(rt, show_value(v));
    ++r.samples;
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    const Interval& a = values[0];
    const Interval& b = values[i];
    const bool same = a.is_exact() && b.is_exact() ? a.lo == b.lo
                                                  : a.lo <= b.hi + opt.tol && b.lo <= a.hi + opt.tol;
    if (!same) r.fail(routes[0] + " route " + show_value(a) + " != " + routes[i] + " route " + show_value(b));
  }

  if (c.format == "json") {
    out << report_json({r});
  } else {
    std::vector<std::vector<std::string>> rows = {{"model", "profile", "invariant", "class", "route", "value"}};
    for (std::size_t i = 0; i < routes.size(); ++i) {
      rows.push_back({m.name, r.profile, c.invariant, cls.str(), routes[i], show_value(values[i])});
    }
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << row[i];
        if (i + 1 < row.size()) out << std::string(w[i] - row[i].size() + 2, ' ');
      }
      out << "\n";
    }
    for (const auto& wit : r.witnesses) out << "MISMATCH: " << wit << "\n";
  }
  return r.ok() ? 0 : 1;
}

int cmd_suite(const Config& c, std::ostream& out) {
  CheckOptions o{c.samples, c.seed, parse_tol(c.tol)};
  std::vector<CheckReport> all;
  for (const auto& m : models_for(c.model)) {
    auto reps = run_suite(m, o);
    all.insert(all.end(), reps.begin(), reps.end());
  }
  emit(all, c, out);
  return all_ok(all) ? 0 : 1;
}

int cmd_golden(const Config& c, std::ostream& out) {
  const Rational tol = parse_tol(c.tol);
  std::vector<CheckReport> all;
  for (const auto& m : models_for(c.model)) all.push_back(golden_run(m, tol));
  emit(all, c, out);
  return all_ok(all) ? 0 : 1;
}

int cmd_export(const Config& c, std::ostream& out) {
  std::filesystem::create_directories(c.out_dir);
  std::size_t written = 0;
  for (const auto& e : list_catalog()) {
    if (!c.model.empty() && e.id != c.model) continue;
    const auto path = std::filesystem::path(c.out_dir) / (e.id + ".json");
    std::ofstream f(path);
    if (!f) throw ModelError(path.string() + ": cannot write");
    f << e.json_text;
    out << path.string() << "\n";
    ++written;
  }
  if (written == 0) throw UsageError("--model: unknown catalog model '" + c.model + "'");
  return 0;
}

void print_cone(std::ostream& out, const std::string& name, const PolyhedralCone& c) {
  out << name << " (dim " << c.dimension() << ")\n  rays:  ";
  for (std::size_t i = 0; i < c.rays().size(); ++i) out << (i ? " " : "") << c.rays()[i].str();
  out << "\n  facets:";
  for (const auto& f : c.facets()) out << " " << f.str();
  out << "\n";
}

int cmd_dual(const Config& c, std::ostream& out) {
  const VarietyModel m = model_for(c.model);
  const bool d1 = dual_cone(m.nef) == m.eff_curves;
  const bool d2 = dual_cone(m.eff_div) == m.mov_curves;
  if (c.format == "json") {
    auto cone = [](const PolyhedralCone& k) {
      nlohmann::ordered_json j;
      std::vector<std::string> rays, facets;
      for (const auto& r : k.rays()) rays.push_back(r.str());
      for (const auto& f : k.facets()) facets.push_back(f.str());
      j["rays"] = rays;
      j["facets"] = facets;
      return j;
    };
    nlohmann::ordered_json j;
    j["model"] = m.name;
    j["nef"] = cone(m.nef);
    j["eff_div"] = cone(m.eff_div);
    j["eff_curves"] = cone(m.eff_curves);
    j["mov_curves"] = cone(m.mov_curves);
    j["nef_dual_is_eff_curves"] = d1;
    j["eff_div_dual_is_mov_curves"] = d2;
    out << j.dump(2) << "\n";
  } else {
    out << "model " << m.name << "\n";
    print_cone(out, "Nef^1", m.nef);
    print_cone(out, "Eff^1", m.eff_div);
    print_cone(out, "Eff_1", m.eff_curves);
    print_cone(out, "Mov_1", m.mov_curves);
    out << "Nef^1* == Eff_1: " << (d1 ? "PASS" : "FAIL") << "\n";
    out << "Eff^1* == Mov_1: " << (d2 ? "PASS" : "FAIL") << "\n";
  }
  return d1 && d2 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local positivity invariants on polyhedral cone models", "conepolar"};
  app.require_subcommand(1);
  Config c;

  auto add_model = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--model", c.model, "catalog id or model file");
    if (required) o->required();
  };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_tol = [&](CLI::App* s) { s->add_option("--tol", c.tol, "tolerance for certified enclosures"); };

  auto* eval = app.add_subcommand("eval", "evaluate one invariant");
  add_model(eval, true);
  eval->add_option("--profile", c.profile, "point profile")->capture_default_str();
  eval->add_option("--invariant", c.invariant, "s, n, N, S, volhat or M")->required();
  eval->add_option("--class", c.cls, "class as comma-separated rationals")->required();
  eval->add_option("--class-kind", c.class_kind, "div or curve")->check(CLI::IsMember({"div", "curve"}));
  eval->add_option("--route", c.route, "exit, polar, divisors or all")
      ->check(CLI::IsMember({"exit", "polar", "divisors", "all"}));
  add_tol(eval);
  add_format(eval);

  auto* suite = app.add_subcommand("suite", "run the theorem checks");
  add_model(suite, false);
  suite->add_option("--samples", c.samples, "samples per check")->capture_default_str();
  suite->add_option("--seed", c.seed, "random seed")->capture_default_str();
  add_tol(suite);
  add_format(suite);

  auto* golden = app.add_subcommand("golden", "diff the catalog golden values");
  add_model(golden, false);
  add_tol(golden);
  add_format(golden);

  auto* exportc = app.add_subcommand("export-catalog", "write the built-in model files");
  add_model(exportc, false);
  exportc->add_option("--out", c.out_dir, "output directory")->capture_default_str();

  auto* dual = app.add_subcommand("dual", "print the cones and verify the dualities");
  add_model(dual, true);
  add_format(dual);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(c, out);
    if (suite->parsed()) return cmd_suite(c, out);
    if (golden->parsed()) return cmd_golden(c, out);
    if (exportc->parsed()) return cmd_export(c, out);
    if (dual->parsed()) return cmd_dual(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: --class: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace conepolar
