#include "conepolar/invariants.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace conepolar {

const char* to_string(Route r) {
  switch (r) {
    case Route::exit: return "exit";
    case Route::polar: return "polar";
    case Route::divisors: return "divisors";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view s) {
  if (s == "exit") return Route::exit;
  if (s == "polar") return Route::polar;
  if (s == "divisors") return Route::divisors;
  return std::nullopt;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

namespace {

RationalMatrix embedding(std::size_t rho) {
  RationalMatrix m(rho + 1, rho);
  for (std::size_t i = 0; i < rho; ++i) m(i, i) = 1;
  return m;
}

Rational exit_or_throw(const PolyhedralCone& c, const RationalVector& base, const RationalVector& dir,
                       const char* what) {
  auto t = exit_parameter(c, base, dir);
  if (!t) throw ModelError(std::string(what) + ": exit parameter is unbounded at " + base.str());
  return *t;
}

void require_in(const PolyhedralCone& c, const RationalVector& v, const char* what, const char* cone) {
  if (v.size() != c.ambient_dim()) throw ContractError(std::string(what) + ": class has the wrong dimension");
  if (!c.contains(v)) throw PreconditionError(std::string(what) + ": " + v.str() + " is not in " + cone);
}

// Stable per-check stream so adding a check does not perturb the others.
std::mt19937_64 rng_for(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return std::mt19937_64(seed ^ h);
}

bool agree(const PolarValue& a, const PolarValue& b, const Rational& tol) {
  if (a.exact() && b.exact()) return a.value.lo == b.value.lo;
  return a.value.width() <= tol && b.value.width() <= tol && a.value.lo <= b.value.hi + tol &&
         b.value.lo <= a.value.hi + tol;
}

std::string show(const PolarValue& v) { return v.exact() ? v.value.lo.str() : v.value.str(); }

std::string dec(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << r.to_double();
  return os.str();
}

template <class F>
CheckReport guarded(const VarietyModel& m, const std::string& profile, const std::string& check, F&& body) {
  CheckReport r;
  r.model = m.name;
  r.profile = profile;
  r.check = check;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("error: ") + e.what());
  }
  return r;
}

constexpr std::size_t kMaxWitnesses = 10;

}  // namespace

void CheckReport::fail(std::string witness) {
  status = CheckStatus::fail;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

// ------------------------------------------------------------ LocalInvariants

LocalInvariants::LocalInvariants(const VarietyModel& model, const std::string& profile, PolarOptions options)
    : model_(&model), profile_(&model.profile(profile)), options_(std::move(options)) {
  const BlowupModel& y = profile_->blowup;
  const RationalMatrix pi = embedding(model.rho);
  const RationalVector minus_e = -exceptional_divisor(y);
  s_fn_ = ConeFunction::exit_based(model.nef, y.nef, pi, minus_e);
  n_fn_ = ConeFunction::exit_based(model.eff_div, y.eff_div, pi, minus_e);
  N_fn_ = ConeFunction::polar_of(s_fn_, options_);
  S_fn_ = ConeFunction::polar_of(n_fn_, options_);
}

Rational LocalInvariants::s(const RationalVector& l) const {
  require_in(model_->nef, l, "seshadri_s", "Nef^1");
  const BlowupModel& y = profile_->blowup;
  return exit_or_throw(y.nef, pullback_div(y, l), -exceptional_divisor(y), "seshadri_s");
}

Rational LocalInvariants::s_via_curves(const RationalVector& l) const {
  require_in(model_->nef, l, "seshadri_s_via_curves", "Nef^1");
  if (profile_->curves_through_x.empty()) {
    throw UnsupportedError("profile " + profile_->name + " lists no curves through x");
  }
  std::optional<Rational> best;
  for (const auto& c : profile_->curves_through_x) {
    const Rational v = pair(model_->pairing, l, c.cls) / c.mult;
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational LocalInvariants::n(const RationalVector& l) const {
  require_in(model_->eff_div, l, "nakayama_n", "Eff^1");
  const BlowupModel& y = profile_->blowup;
  return exit_or_throw(y.eff_div, pullback_div(y, l), -exceptional_divisor(y), "nakayama_n");
}

PolarValue LocalInvariants::N(const RationalVector& alpha, Route route) const {
  require_in(model_->eff_curves, alpha, "nakayama_N", "Eff_1");
  const BlowupModel& y = profile_->blowup;
  switch (route) {
    case Route::exit:
      return {Interval::point(exit_or_throw(y.eff_curves, pullback_curve(y, alpha), exceptional_curve_class(y),
                                            "nakayama_N")),
              std::nullopt, false};
    case Route::polar: return polar_eval(s_fn_, alpha, options_);
    case Route::divisors: break;
  }
  throw ContractError("nakayama_N: the divisors route only exists for S");
}

PolarValue LocalInvariants::S(const RationalVector& alpha, Route route) const {
  require_in(model_->mov_curves, alpha, "seshadri_S", "Mov_1");
  const BlowupModel& y = profile_->blowup;
  switch (route) {
    case Route::exit:
      return {Interval::point(exit_or_throw(y.mov_curves, pullback_curve(y, alpha), exceptional_curve_class(y),
                                            "seshadri_S")),
              std::nullopt, false};
    case Route::polar: return polar_eval(n_fn_, alpha, options_);
    case Route::divisors: {
      if (profile_->divisors_through_x.empty()) {
        throw UnsupportedError("profile " + profile_->name + " lists no divisors through x");
      }
      std::optional<Rational> best;
      for (const auto& d : profile_->divisors_through_x) {
        const Rational v = pair(model_->pairing, d.cls, alpha) / d.mult;
        if (!best || v < *best) best = v;
      }
      return {Interval::point(*best), std::nullopt, false};
    }
  }
  return {};
}

Rational seshadri_s(const VarietyModel& m, const std::string& profile, const RationalVector& l) {
  return LocalInvariants(m, profile).s(l);
}

Rational seshadri_s_via_curves(const VarietyModel& m, const std::string& profile, const RationalVector& l) {
  return LocalInvariants(m, profile).s_via_curves(l);
}

Rational nakayama_n(const VarietyModel& m, const std::string& profile, const RationalVector& l) {
  return LocalInvariants(m, profile).n(l);
}

PolarValue nakayama_N(const VarietyModel& m, const std::string& profile, const RationalVector& alpha, Route route,
                      const PolarOptions& options) {
  return LocalInvariants(m, profile, options).N(alpha, route);
}

PolarValue seshadri_S(const VarietyModel& m, const std::string& profile, const RationalVector& alpha, Route route,
                      const PolarOptions& options) {
  return LocalInvariants(m, profile, options).S(alpha, route);
}

Rational global_S(const VarietyModel& m, const RationalVector& alpha) {
  require_in(m.mov_curves, alpha, "global_S", "Mov_1");
  std::optional<Rational> best;
  for (const auto& p : m.profiles) {
    const BlowupModel& y = p.blowup;
    const Rational v =
        exit_or_throw(y.mov_curves, pullback_curve(y, alpha), exceptional_curve_class(y), "global_S");
    if (!best || v < *best) best = v;
  }
  return *best;
}

ConeFunction nef_volume_root(const VarietyModel& m) {
  return ConeFunction::power_polynomial(m.nef, {PolynomialPiece{m.nef, m.top_intersection}}, m.dim);
}

PolarValue vol_hat_root(const VarietyModel& m, const RationalVector& alpha, const PolarOptions& options) {
  require_in(m.eff_curves, alpha, "vol_hat", "Eff_1");
  return polar_eval(nef_volume_root(m), alpha, options);
}

PolarValue M_root(const VarietyModel& m, const RationalVector& alpha, const PolarOptions& options) {
  require_in(m.mov_curves, alpha, "M", "Mov_1");
  return polar_eval(m.volume_root, alpha, options);
}

Interval vol_hat(const VarietyModel& m, const RationalVector& alpha, const PolarOptions& options) {
  return rational_power(vol_hat_root(m, alpha, options).value, m.dim, m.dim - 1);
}

Interval M_func(const VarietyModel& m, const RationalVector& alpha, const PolarOptions& options) {
  return rational_power(M_root(m, alpha, options).value, m.dim, m.dim - 1);
}

// ------------------------------------------------------------------ reports

std::string report_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["model"] = r.model;
    j["profile"] = r.profile;
    j["check"] = r.check;
    j["status"] = to_string(r.status);
    j["samples"] = r.samples;
    j["witnesses"] = r.witnesses;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    j["values"] = values;
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string report_table(const std::vector<CheckReport>& reports) {
  std::vector<std::vector<std::string>> rows = {{"model", "profile", "check", "status", "samples", "detail"}};
  for (const auto& r : reports) {
    std::string detail;
    if (!r.witnesses.empty()) {
      detail = r.witnesses.front();
      if (r.witnesses.size() > 1) detail += " (+" + std::to_string(r.witnesses.size() - 1) + " more)";
    } else {
      for (const auto& [k, v] : r.values) detail += (detail.empty() ? "" : ", ") + k + "=" + v;
    }
    rows.push_back({r.model, r.profile, r.check, to_string(r.status), std::to_string(r.samples), detail});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i + 1 < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << "\n";
  }
  for (const auto& r : reports) {
    for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
      os << "  " << r.model << "/" << r.profile << "/" << r.check << ": " << r.witnesses[i] << "\n";
    }
  }
  return os.str();
}

// ------------------------------------------------------------------- checks

CheckReport check_theorem_A(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "theorem_A", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    const ConeFunction vroot = nef_volume_root(m);
    auto rng = rng_for(o.seed, "theorem_A");
    Rational slack;
    bool first = true;
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector a = random_point(m.eff_curves, rng);
      const PolarValue ex = inv.N(a, Route::exit);
      const PolarValue po = inv.N(a, Route::polar);
      if (!agree(ex, po, o.tol)) r.fail("alpha=" + a.str() + ": exit " + show(ex) + " != polar " + show(po));
      const PolarValue bound = polar_eval(vroot, a, PolarOptions{o.tol});
      if (ex.value.lo < bound.value.hi) {
        r.fail("alpha=" + a.str() + ": N_x=" + show(ex) + " < vol_hat^((n-1)/n) in " + bound.value.str());
      }
      const Rational gap = ex.value.lo - bound.value.hi;
      if (first || gap < slack) slack = gap;
      first = false;
      ++r.samples;
    }
    r.value("min_gap", dec(slack));
  });
}

CheckReport check_theorem_B(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "theorem_B", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    auto rng = rng_for(o.seed, "theorem_B");
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector a = random_point(m.mov_curves, rng);
      const PolarValue ex = inv.S(a, Route::exit);
      const PolarValue po = inv.S(a, Route::polar);
      if (!agree(ex, po, o.tol)) r.fail("alpha=" + a.str() + ": exit " + show(ex) + " != polar " + show(po));
      const PolarValue bound = M_root(m, a, PolarOptions{o.tol});
      if (ex.value.hi > bound.value.lo) {
        r.fail("alpha=" + a.str() + ": S_x=" + show(ex) + " > M^((n-1)/n) in " + bound.value.str());
      }
      ++r.samples;
    }
    // interior criterion: S(a) > 0 inside Mov_1, S(a) = 0 on its boundary rays
    std::size_t interior = 0;
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector a = random_point(m.mov_curves, rng, 0.0);
      if (membership(m.mov_curves, a).status != MembershipStatus::interior) continue;
      ++interior;
      if (global_S(m, a).sign() <= 0) r.fail("interior alpha=" + a.str() + " has S(alpha) = 0");
    }
    std::size_t boundary = 0, boundary_M_positive = 0;
    if (m.mov_curves.dimension() > 1) {
      for (const auto& ray : m.mov_curves.rays()) {
        ++boundary;
        const PolarValue mr = M_root(m, ray, PolarOptions{o.tol});
        if (mr.value.lo.sign() > 0) ++boundary_M_positive;
        const Rational s = global_S(m, ray);
        if (s.sign() != 0) r.fail("boundary ray " + ray.str() + " has S(alpha) = " + s.str() + " > 0");
      }
    }
    r.value("interior_samples", std::to_string(interior));
    r.value("boundary_rays", std::to_string(boundary));
    r.value("boundary_rays_M_positive", std::to_string(boundary_M_positive));
  });
}

CheckReport check_S_le_N(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "S_le_N", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    auto rng = rng_for(o.seed, "S_le_N");
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector a = random_point(m.mov_curves, rng);
      const Rational s = inv.S(a, Route::exit).value.lo;
      const Rational n = inv.N(a, Route::exit).value.lo;
      if (s > n) r.fail("alpha=" + a.str() + ": S_x=" + s.str() + " > N_x=" + n.str());
      ++r.samples;
    }
  });
}

bool VanishingLocusResult::holds() const {
  return is_boundary_mov && M_positive && zero_profiles == expected_zero_profiles &&
         (catalog_enk.empty() || catalog_enk == divisorial_enk);
}

VanishingLocusResult vanishing_locus(const VarietyModel& m, const RationalVector& alpha,
                                     const std::vector<std::string>& catalog_enk) {
  if (!m.is_surface()) throw UnsupportedError("the vanishing locus is only modelled on surfaces");
  require_in(m.mov_curves, alpha, "vanishing_locus", "Mov_1");
  VanishingLocusResult v;
  v.alpha = alpha;
  v.is_boundary_mov = membership(m.mov_curves, alpha).status == MembershipStatus::boundary;
  v.M_positive = M_root(m, alpha).value.lo.sign() > 0;
  for (const auto& p : m.profiles) {
    const BlowupModel& y = p.blowup;
    auto t = exit_parameter(y.mov_curves, pullback_curve(y, alpha), exceptional_curve_class(y));
    if (t && t->is_zero()) v.zero_profiles.push_back(p.name);
  }
  // on a surface L_alpha is alpha itself read as a divisor class
  std::set<std::string> enk;
  if (m.eff_div.contains(alpha)) {
    const auto z = zariski_decompose(m, alpha);
    for (const auto& c : m.negative_curves) {
      if (pair(m.pairing, z.positive, c.cls).is_zero()) enk.insert(c.label);
    }
    for (const auto& part : z.negative_support) enk.insert(part.label);
  }
  v.divisorial_enk.assign(enk.begin(), enk.end());
  v.catalog_enk = catalog_enk;
  std::sort(v.catalog_enk.begin(), v.catalog_enk.end());
  for (const auto& p : m.profiles) {
    if (std::any_of(p.lies_on.begin(), p.lies_on.end(), [&](const std::string& l) { return enk.count(l) > 0; })) {
      v.expected_zero_profiles.push_back(p.name);
    }
  }
  return v;
}

CheckReport check_theorem_C(const VarietyModel& m, const CheckOptions& o) {
  return guarded(m, "*", "theorem_C", [&](CheckReport& r) {
    (void)o;
    if (!m.is_surface()) {
      r.status = CheckStatus::skip;
      r.value("reason", "not a surface");
      return;
    }
    if (m.vanishing_cases.empty()) {
      r.status = CheckStatus::skip;
      r.value("reason", "no boundary class of Mov_1 with M > 0");
      return;
    }
    auto join = [](const std::vector<std::string>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
      return s + "}";
    };
    for (const auto& c : m.vanishing_cases) {
      const auto v = vanishing_locus(m, c.alpha, c.enk_divisorial);
      ++r.samples;
      r.value("alpha=" + c.alpha.str(), "zero at " + join(v.zero_profiles) + ", E_nK " + join(v.divisorial_enk));
      if (!v.is_boundary_mov) r.fail("alpha=" + c.alpha.str() + " is not on the boundary of Mov_1");
      if (!v.M_positive) r.fail("alpha=" + c.alpha.str() + " has M = 0");
      if (v.zero_profiles != v.expected_zero_profiles) {
        r.fail("alpha=" + c.alpha.str() + ": S_x = 0 at " + join(v.zero_profiles) + " but profiles on E_nK are " +
               join(v.expected_zero_profiles));
      }
      if (!v.catalog_enk.empty() && v.catalog_enk != v.divisorial_enk) {
        r.fail("alpha=" + c.alpha.str() + ": computed E_nK " + join(v.divisorial_enk) + " != catalog " +
               join(v.catalog_enk));
      }
    }
  });
}

CheckReport check_fulger_bound(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "fulger_bound", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    const BlowupModel& y = inv.profile().blowup;
    auto rng = rng_for(o.seed, "fulger_bound");
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector l = random_point(m.nef, rng);
      const RationalVector a = curve_power(m, l);
      const Rational t = inv.s(l).pow(m.dim - 1);
      const Rational big_s = inv.S(a, Route::exit).value.lo;
      if (big_s < t) r.fail("L=" + l.str() + ": S_x(L^(n-1))=" + big_s.str() + " < s_x(L)^(n-1)=" + t.str());
      const RationalVector witness = pullback_curve(y, a) + exceptional_curve_class(y) * t;
      if (!y.mov_curves.contains(witness)) {
        r.fail("L=" + l.str() + ": pi*alpha + s^(n-1) e = " + witness.str() + " is not movable on Y");
      }
      ++r.samples;
    }
  });
}

CheckReport check_n_upper_bound(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "n_upper_bound", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    RationalVector a(m.rho);
    for (const auto& ray : m.nef.rays()) a += ray;
    const RationalVector a_curve = curve_power(m, a);
    // n_x is concave and linear on its chambers, so on the slice
    // L.A^(n-1) = 1 its maximum sits at a chamber ray
    std::optional<Rational> c_star;
    for (const auto& ray : inv.n_function().breakpoint_rays()) {
      const Rational d = pair(m.pairing, ray, a_curve);
      if (d.sign() <= 0) {
        r.fail("ray " + ray.str() + " of Eff^1 has L.A^(n-1) = " + d.str() + ", so c* is infinite");
        return;
      }
      const Rational c = inv.n(ray) / d;
      if (!c_star || c > *c_star) c_star = c;
    }
    r.value("A", a.str());
    r.value("c*", c_star->str());
    auto rng = rng_for(o.seed, "n_upper_bound");
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector l = random_point(m.eff_div, rng);
      const Rational n = inv.n(l);
      const Rational bound = *c_star * pair(m.pairing, l, a_curve);
      if (n > bound) r.fail("L=" + l.str() + ": n_x=" + n.str() + " > c* L.A^(n-1)=" + bound.str());
      ++r.samples;
    }
  });
}

CheckReport check_n_lower_bound(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "n_lower_bound", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    auto rng = rng_for(o.seed, "n_lower_bound");
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector l = random_point(m.eff_div, rng, 0.0);
      const Rational n = inv.n(l);
      const Rational v = volume(m, l);
      if (n.pow(m.dim) < v) r.fail("L=" + l.str() + ": n_x^n=" + n.pow(m.dim).str() + " < vol=" + v.str());
      ++r.samples;
    }
  });
}

CheckReport check_zariski_additivity(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "zariski_additivity", [&](CheckReport& r) {
    if (!m.is_surface()) {
      r.status = CheckStatus::skip;
      r.value("reason", "Zariski decomposition is only modelled on surfaces");
      return;
    }
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    auto rng = rng_for(o.seed, "zariski_additivity");
    std::size_t nontrivial = 0;
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector l = random_point(m.eff_div, rng);
      const auto z = zariski_decompose(m, l);
      const RationalVector neg = z.negative();
      if (!neg.is_zero()) ++nontrivial;
      const Rational lhs = inv.n(l);
      const Rational rhs = inv.n(z.positive) + inv.n(neg);
      if (lhs != rhs) {
        r.fail("L=" + l.str() + ": n_x(L)=" + lhs.str() + " != n_x(P)+n_x(N)=" + rhs.str() + " with P=" +
               z.positive.str() + ", N=" + neg.str());
      }
      ++r.samples;
    }
    r.value("nontrivial_N", std::to_string(nontrivial));
  });
}

CheckReport check_route_agreement(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "route_agreement", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    auto rng = rng_for(o.seed, "route_agreement");
    std::size_t divisor_equal = 0, divisor_samples = 0;
    const bool divisors = !inv.profile().divisors_through_x.empty();
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector a = random_point(m.eff_curves, rng);
      const PolarValue ex = inv.N(a, Route::exit), po = inv.N(a, Route::polar);
      if (!agree(ex, po, o.tol)) r.fail("N_x(" + a.str() + "): exit " + show(ex) + " != polar " + show(po));
      const RationalVector b = random_point(m.mov_curves, rng);
      const PolarValue sx = inv.S(b, Route::exit), sp = inv.S(b, Route::polar);
      if (!agree(sx, sp, o.tol)) r.fail("S_x(" + b.str() + "): exit " + show(sx) + " != polar " + show(sp));
      if (divisors) {
        // divisors through x only bound S_x from above
        const PolarValue sd = inv.S(b, Route::divisors);
        ++divisor_samples;
        if (sd.value.lo < sx.value.lo) {
          r.fail("S_x(" + b.str() + "): divisor route " + show(sd) + " < exit " + show(sx));
        } else if (sd.value.lo == sx.value.lo) {
          ++divisor_equal;
        }
      }
      r.samples += 2;
    }
    if (divisors) r.value("divisor_route_equal", std::to_string(divisor_equal) + "/" + std::to_string(divisor_samples));
  });
}

CheckReport check_self_duality(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "self_duality", [&](CheckReport& r) {
    if (!m.is_surface()) {
      r.status = CheckStatus::skip;
      r.value("reason", "not a surface");
      return;
    }
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    auto rng = rng_for(o.seed, "self_duality");
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector w = random_point(m.eff_curves, rng);
      const PolarValue hs = polar_eval(inv.s_function(), w, inv.options());
      const PolarValue n{Interval::point(inv.n(w)), std::nullopt, false};
      if (!agree(hs, n, o.tol)) r.fail("w=" + w.str() + ": H s_x=" + show(hs) + " != n_x=" + show(n));
      const RationalVector v = random_point(m.mov_curves, rng);
      const PolarValue hn = polar_eval(inv.n_function(), v, inv.options());
      const PolarValue s{Interval::point(inv.s(v)), std::nullopt, false};
      if (!agree(hn, s, o.tol)) r.fail("v=" + v.str() + ": H n_x=" + show(hn) + " != s_x=" + show(s));
      r.samples += 2;
    }
  });
}

CheckReport check_hconc_invariants(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "hconc", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    const std::vector<std::pair<std::string, const ConeFunction*>> fns = {
        {"s_x", &inv.s_function()},
        {"n_x", &inv.n_function()},
        {"N_x", &inv.N_function()},
        {"S_x", &inv.S_function()},
        {"vol^(1/n)", &m.volume_root}};
    for (const auto& [name, f] : fns) {
      for (const auto& rep : check_hconc(*f, o.samples, o.seed, o.tol)) {
        r.samples += rep.samples;
        for (const auto& c : rep.counterexamples) r.fail(name + " " + rep.property + ": " + c);
      }
    }
  });
}

CheckReport check_basic_inequalities(const VarietyModel& m, const std::string& profile, const CheckOptions& o) {
  return guarded(m, profile, "basic_inequalities", [&](CheckReport& r) {
    LocalInvariants inv(m, profile, PolarOptions{o.tol});
    auto rng = rng_for(o.seed, "basic_inequalities");
    const bool curves = !inv.profile().curves_through_x.empty();
    for (std::size_t i = 0; i < o.samples; ++i) {
      const RationalVector l = random_point(m.nef, rng);
      const Rational s = inv.s(l), n = inv.n(l);
      if (s > n) r.fail("L=" + l.str() + ": s_x=" + s.str() + " > n_x=" + n.str());
      if (curves) {
        const Rational sc = inv.s_via_curves(l);
        if (sc < s) r.fail("L=" + l.str() + ": curve bound " + sc.str() + " < s_x=" + s.str());
      }
      const RationalVector a = random_point(m.eff_curves, rng);
      const RationalVector a2 = a + random_point(m.eff_curves, rng);
      if (inv.N(a2, Route::exit).value.lo < inv.N(a, Route::exit).value.lo) {
        r.fail("N_x not monotone from " + a.str() + " to " + a2.str());
      }
      const RationalVector b = random_point(m.mov_curves, rng);
      const RationalVector b2 = b + random_point(m.mov_curves, rng);
      if (inv.S(b2, Route::exit).value.lo < inv.S(b, Route::exit).value.lo) {
        r.fail("S_x not monotone from " + b.str() + " to " + b2.str());
      }
      ++r.samples;
    }
  });
}

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names = {"theorem_A",     "theorem_B",     "S_le_N",
                                                 "theorem_C",     "fulger_bound",  "n_upper_bound",
                                                 "n_lower_bound", "zariski_additivity"};
  return names;
}

std::vector<CheckReport> run_suite(const VarietyModel& m, const CheckOptions& o) {
  std::vector<CheckReport> out;
  for (const auto& p : m.profiles) {
    out.push_back(check_theorem_A(m, p.name, o));
    out.push_back(check_theorem_B(m, p.name, o));
    out.push_back(check_S_le_N(m, p.name, o));
    out.push_back(check_fulger_bound(m, p.name, o));
    out.push_back(check_n_upper_bound(m, p.name, o));
    out.push_back(check_n_lower_bound(m, p.name, o));
    out.push_back(check_zariski_additivity(m, p.name, o));
  }
  out.push_back(check_theorem_C(m, o));
  return out;
}

}  // namespace conepolar
