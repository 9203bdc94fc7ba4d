// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Sample counts and the tolerance are pinned here.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conepolar/catalog.hpp"
#include "conepolar/invariants.hpp"

using namespace conepolar;

namespace {

const Rational kTol(1, 1000000000);
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 8) notes.push_back(why);
  }
  void absorb(const CheckReport& r) {
    if (r.status == CheckStatus::fail) {
      fail(r.model + "/" + r.profile + "/" + r.check + ": " + (r.witnesses.empty() ? "" : r.witnesses.front()));
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<VarietyModel> g_models;

Outcome cone_duality() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& m : g_models) {
    if (!(dual_cone(m.nef) == m.eff_curves)) o.fail(m.name + ": Nef^1* != Eff_1");
    if (!(dual_cone(m.eff_div) == m.mov_curves)) o.fail(m.name + ": Eff^1* != Mov_1");
  }
  const double t = seconds_since(t0);
  if (t >= 1.0) o.fail("runtime " + std::to_string(t) + " s >= 1 s");
  o.notes.push_back("5 models, " + std::to_string(t) + " s");
  return o;
}

Outcome route_agreement() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t n = 0;
  for (const auto& m : g_models) {
    for (const auto& p : m.profiles) {
      const auto r = check_route_agreement(m, p.name, {200, kSeed, kTol});
      o.absorb(r);
      n += r.samples;
    }
  }
  const double t = seconds_since(t0);
  if (t >= 60.0) o.fail("runtime " + std::to_string(t) + " s >= 60 s");
  o.notes.push_back(std::to_string(n) + " comparisons, " + std::to_string(t) + " s");
  return o;
}

Outcome per_profile(const std::function<CheckReport(const VarietyModel&, const std::string&)>& check) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& m : g_models) {
    for (const auto& p : m.profiles) {
      const auto r = check(m, p.name);
      o.absorb(r);
      n += r.samples;
    }
  }
  o.notes.push_back(std::to_string(n) + " samples");
  return o;
}

Outcome theorem_B() {
  Outcome o = per_profile([](const VarietyModel& m, const std::string& p) {
    return check_theorem_B(m, p, {200, kSeed, kTol});
  });
  // a boundary ray of Mov_1 with M > 0 must have S = 0
  const auto& bl = *std::find_if(g_models.begin(), g_models.end(), [](const VarietyModel& m) {
    return m.name == "BlqP2";
  });
  const RationalVector h{1, 0};
  if (membership(bl.mov_curves, h).status != MembershipStatus::boundary) o.fail("H is not on the boundary of Mov_1");
  if (!(M_root(bl, h, {kTol}).value.lo > 0)) o.fail("M(H) is not positive");
  if (global_S(bl, h) != 0) o.fail("S(H) = " + global_S(bl, h).str() + " on BlqP2");
  std::size_t probes = 0;
  for (const auto& m : g_models) {
    if (m.mov_curves.dimension() < 2) continue;
    for (const auto& ray : m.mov_curves.rays()) {
      if (!(M_root(m, ray, {kTol}).value.lo > 0)) continue;
      ++probes;
      if (global_S(m, ray) != 0) o.fail(m.name + ": S = " + global_S(m, ray).str() + " on boundary ray " + ray.str());
    }
  }
  o.notes.push_back(std::to_string(probes) + " boundary rays with M > 0");
  return o;
}

Outcome self_duality() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& m : g_models) {
    if (!m.is_surface()) continue;
    for (const auto& p : m.profiles) {
      const auto r = check_self_duality(m, p.name, {50, kSeed, kTol});
      if (r.status != CheckStatus::pass) o.fail(m.name + "/" + p.name + ": " + to_string(r.status));
      o.absorb(r);
      n += r.samples;
    }
  }
  o.notes.push_back(std::to_string(n) + " rays");
  return o;
}

Outcome theorem_C() {
  Outcome o;
  const auto bl = load_catalog_model("BlqP2");
  const RationalVector h{1, 0};
  const auto on_f = seshadri_S(bl, "on_curve_F", h);
  const auto generic = seshadri_S(bl, "generic", h);
  if (!on_f.exact() || on_f.value.lo != 0) o.fail("S_x(H) on F is " + on_f.value.str());
  if (!(generic.value.lo > 0)) o.fail("S_x(H) at a generic point is " + generic.value.str());
  const auto v = vanishing_locus(bl, h, {"F"});
  if (!v.holds()) o.fail("vanishing locus does not match E_nK = {F}");
  if (v.divisorial_enk != std::vector<std::string>{"F"}) o.fail("computed E_nK differs from {F}");
  for (const auto& m : g_models) o.absorb(check_theorem_C(m, {200, kSeed, kTol}));
  o.notes.push_back("S_x(H) = 0 on F, " + generic.value.lo.str() + " off F");
  return o;
}

Outcome section_three() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& m : g_models) {
    for (const auto& p : m.profiles) {
      const CheckOptions opt{200, kSeed, kTol};
      auto up = check_n_upper_bound(m, p.name, opt);
      auto lo = check_n_lower_bound(m, p.name, opt);
      o.absorb(up);
      o.absorb(lo);
      n += lo.samples;
      if (m.is_surface()) {
        auto z = check_zariski_additivity(m, p.name, opt);
        if (z.status != CheckStatus::pass) o.fail(m.name + "/" + p.name + ": Zariski additivity not run");
        o.absorb(z);
        n += z.samples;
      }
    }
  }
  o.notes.push_back(std::to_string(n) + " samples");
  return o;
}

// s_x <= vol^(1/n) on Nef^1, vol^(1/n) <= n_x on Eff^1, and random pairs of
// minima of linear forms
Outcome order_reversal() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> coef(0, 4);
  std::size_t pairs = 0;
  auto run = [&](const ConeFunction& f1, const ConeFunction& f2, const std::string& what) {
    const auto r = check_order_reversal(f1, f2, 5, kSeed + pairs, kTol);
    ++pairs;
    for (const auto& c : r.counterexamples) o.fail(what + ": " + c);
  };
  for (const auto& m : g_models) {
    const LocalInvariants inv(m, "generic", {kTol});
    run(inv.s_function(), nef_volume_root(m), m.name + " s_x <= vol^(1/n)");
    run(m.volume_root, inv.n_function(), m.name + " vol^(1/n) <= n_x");
  }
  while (pairs < 50) {
    const auto& m = g_models[pairs % g_models.size()];
    const auto& dom = m.eff_div;
    auto form = [&] {
      RationalVector f(m.rho);
      for (const auto& g : dom.facets()) f += dom.normal(g) * Rational(1 + coef(rng));
      return f;
    };
    std::vector<RationalVector> forms = {form(), form()};
    const auto f2 = ConeFunction::min_of_linear(dom, forms);
    forms.push_back(form());
    const auto f1 = ConeFunction::min_of_linear(dom, forms);
    run(f1, f2, m.name + " random pair");
  }
  o.notes.push_back(std::to_string(pairs) + " pairs");
  return o;
}

Outcome hconc_framework() {
  Outcome o = per_profile([](const VarietyModel& m, const std::string& p) {
    return check_hconc_invariants(m, p, {500, kSeed, kTol});
  });
  const Outcome rev = order_reversal();
  if (!rev.pass) o.pass = false;
  o.notes.insert(o.notes.end(), rev.notes.begin(), rev.notes.end());
  const auto q = load_catalog_model("P1xP1");
  const Interval m = M_func(q, {1, 1}, {kTol});
  const Interval d{m.lo - 2, m.hi - 2};
  if (!(d.lo.abs() <= kTol && d.hi.abs() <= kTol)) o.fail("M(f1+f2) = " + m.str() + " is not 2 within 1e-9");
  o.notes.push_back("M(f1+f2) in " + std::to_string(m.lo.to_double()) + ".." + std::to_string(m.hi.to_double()));
  return o;
}

Outcome golden(Clock::time_point start) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& e : list_catalog()) {
    const auto r = golden_run(e, kTol);
    o.absorb(r);
    n += r.samples;
    if (r.samples != e.expected_values.size()) o.fail(e.id + ": not every expected value was evaluated");
  }
  const double t = seconds_since(start);
  if (t >= 300.0) o.fail("full suite runtime " + std::to_string(t) + " s >= 300 s");
  o.notes.push_back(std::to_string(n) + " values, suite " + std::to_string(t) + " s");
  return o;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  for (const auto& e : list_catalog()) g_models.push_back(load_model(e.json_text));

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const CheckOptions o200{200, kSeed, kTol};
  const std::vector<Criterion> criteria = {
      {1, "cone duality", cone_duality},
      {2, "route agreement for N_x and S_x", route_agreement},
      {3, "N_x >= vol_hat^((n-1)/n)",
       [&] { return per_profile([&](const VarietyModel& m, const std::string& p) { return check_theorem_A(m, p, o200); }); }},
      {4, "S_x <= M^((n-1)/n) and the interior criterion", theorem_B},
      {5, "S_x <= N_x",
       [&] { return per_profile([&](const VarietyModel& m, const std::string& p) { return check_S_le_N(m, p, o200); }); }},
      {6, "surface self-duality of s_x and n_x", self_duality},
      {7, "vanishing locus on BlqP2", theorem_C},
      {8, "n_x >= vol^(1/n), Zariski additivity, finite c*", section_three},
      {9, "S_x(L^(n-1)) >= s_x(L)^(n-1) with movable witness",
       [] {
         return per_profile([](const VarietyModel& m, const std::string& p) {
           return check_fulger_bound(m, p, {50, kSeed, kTol});
         });
       }},
      {10, "HConc framework", hconc_framework},
      {11, "golden values", [&] { return golden(start); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("error: ") + e.what());
    }
    if (!out.pass) ++failures;
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name;
    if (!out.notes.empty()) {
      std::cout << " (";
      for (std::size_t i = 0; i < out.notes.size(); ++i) std::cout << (i ? "; " : "") << out.notes[i];
      std::cout << ")";
    }
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
