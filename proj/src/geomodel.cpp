#include "conepolar/geomodel.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace conepolar {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ModelError(where + ": " + what); }

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, "missing field '" + key + "'");
  return j.at(key);
}

std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Rational read_rational(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const ContractError& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational (string \"p/q\" or integer)");
}

RationalVector read_vector(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != dim) fail(where, "expected " + std::to_string(dim) + " entries, found " + std::to_string(j.size()));
  RationalVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = read_rational(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

RationalMatrix read_matrix(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) fail(where, "expected " + std::to_string(n) + " rows");
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const RationalVector row = read_vector(j[r], n, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

std::vector<std::string> read_strings(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<RationalVector> read_rays(const json& j, std::size_t dim, const std::string& where) {
  const json& rays = field(j, "rays", where);
  if (!rays.is_array()) fail(where + ".rays", "expected an array");
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string at = where + ".rays[" + std::to_string(i) + "]";
    RationalVector r = read_vector(rays[i], dim, at);
    if (r.is_zero() || !(primitive(r) == r)) fail(at, "ray " + r.str() + " is not a primitive integer vector");
    out.push_back(std::move(r));
  }
  return out;
}

PolyhedralCone read_cone(const json& j, const std::string& key, const RationalMatrix& q, const std::string& where) {
  const std::string at = where.empty() ? key : where + "." + key;
  auto rays = read_rays(field(j, key, where.empty() ? "model" : where), q.cols(), at);
  try {
    PolyhedralCone c = PolyhedralCone::from_rays(rays, q);
    if (c.rays().size() != rays.size()) fail(at, "listed rays are not all extremal");
    return c;
  } catch (const ContractError& e) {
    fail(at, e.what());
  }
}

Polynomial read_polynomial(const json& j, std::size_t nvars, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of terms");
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& e = field(j[i], "exp", at);
    if (!e.is_array() || e.size() != nvars) fail(at + ".exp", "expected " + std::to_string(nvars) + " exponents");
    std::vector<unsigned> exp;
    for (const auto& x : e) {
      if (!x.is_number_unsigned()) fail(at + ".exp", "exponents must be nonnegative integers");
      exp.push_back(x.get<unsigned>());
    }
    terms.push_back({exp, read_rational(field(j[i], "coef", at), at + ".coef")});
  }
  return Polynomial(nvars, terms);
}

std::vector<Incidence> read_incidences(const json& j, std::size_t rho, const std::string& where) {
  std::vector<Incidence> out;
  if (!j.is_array()) fail(where, "expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    Incidence inc{read_string(field(j[i], "label", at), at + ".label"),
                  read_vector(field(j[i], "class", at), rho, at + ".class"),
                  read_rational(field(j[i], "mult", at), at + ".mult")};
    if (inc.mult < Rational(1)) fail(at + ".mult", "multiplicity must be at least 1");
    out.push_back(std::move(inc));
  }
  return out;
}

void require_dual(const PolyhedralCone& a, const PolyhedralCone& b, const std::string& where, const std::string& what) {
  if (!(dual_cone(a) == b)) fail(where, "duality violated: " + what);
}

void validate_blowup(const VarietyModel& m, const PointProfile& p, const std::string& where) {
  const BlowupModel& b = p.blowup;
  if (!(b.pairing == RationalMatrix::extend_diagonal(m.pairing, -1))) {
    fail(where + ".blowup.pairing",
         "expected the model pairing extended by E.l_E = -1 with E orthogonal to pulled-back curves");
  }
  require_dual(b.nef, b.eff_curves, where + ".blowup", "Nef(Y)* != Eff_1(Y)");
  require_dual(b.eff_div, b.mov_curves, where + ".blowup", "Eff^1(Y)* != Mov_1(Y)");
  for (const auto& r : m.nef.rays()) {
    if (!b.nef.contains(pullback_div(b, r))) fail(where + ".blowup.nef", "pullback of nef ray " + r.str() + " is not nef");
  }
  for (const auto& r : m.eff_curves.rays()) {
    if (!b.eff_curves.contains(pullback_curve(b, r))) {
      fail(where + ".blowup.eff_curves", "pullback of curve ray " + r.str() + " is not pseudo-effective");
    }
  }
  for (std::size_t i = 0; i < p.curves_through_x.size(); ++i) {
    if (!m.eff_curves.contains(p.curves_through_x[i].cls)) {
      fail(where + ".curves_through_x[" + std::to_string(i) + "]", "class is not in Eff_1");
    }
  }
  for (std::size_t i = 0; i < p.divisors_through_x.size(); ++i) {
    if (!m.eff_div.contains(p.divisors_through_x[i].cls)) {
      fail(where + ".divisors_through_x[" + std::to_string(i) + "]", "class is not in Eff^1");
    }
  }
}

}  // namespace

const PointProfile& VarietyModel::profile(std::string_view pname) const {
  for (const auto& p : profiles) {
    if (p.name == pname) return p;
  }
  std::string known;
  for (const auto& p : profiles) known += (known.empty() ? "" : ", ") + p.name;
  throw ContractError("model " + name + " has no profile '" + std::string(pname) + "' (known: " + known + ")");
}

VarietyModel load_model(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("model: invalid JSON: ") + e.what());
  }
  VarietyModel m;
  m.name = read_string(field(j, "name", "model"), "name");
  const json& dim = field(j, "dim", "model");
  if (!dim.is_number_unsigned() || dim.get<unsigned>() < 2) fail("dim", "expected an integer >= 2");
  m.dim = dim.get<unsigned>();
  m.divisor_basis = read_strings(field(j, "divisor_basis", "model"), "divisor_basis");
  m.curve_basis = read_strings(field(j, "curve_basis", "model"), "curve_basis");
  m.rho = m.divisor_basis.size();
  if (m.rho == 0) fail("divisor_basis", "empty basis");
  if (m.curve_basis.size() != m.rho) fail("curve_basis", "length differs from divisor_basis");
  m.pairing = read_matrix(field(j, "pairing", "model"), m.rho, "pairing");
  if (m.pairing.determinant().is_zero()) fail("pairing", "intersection pairing is degenerate");
  if (m.is_surface()) {
    if (!m.pairing.is_symmetric()) fail("pairing", "a surface pairing must be symmetric");
  }
  m.top_intersection = read_polynomial(field(j, "top_intersection", "model"), m.rho, "top_intersection");
  try {
    if (m.top_intersection.homogeneous_degree() != m.dim) fail("top_intersection", "degree differs from dim");
  } catch (const ContractError& e) {
    fail("top_intersection", e.what());
  }

  const RationalMatrix qd = m.pairing.transpose();
  m.nef = read_cone(j, "nef", qd, "");
  m.eff_div = read_cone(j, "eff_div", qd, "");
  m.eff_curves = read_cone(j, "eff_curves", m.pairing, "");
  m.mov_curves = read_cone(j, "mov_curves", m.pairing, "");
  require_dual(m.nef, m.eff_curves, "nef", "Nef^1* != Eff_1");
  require_dual(m.eff_div, m.mov_curves, "eff_div", "Eff^1* != Mov_1");
  if (!m.eff_div.contains(m.nef)) fail("nef", "Nef^1 is not contained in Eff^1");
  if (!m.eff_curves.contains(m.mov_curves)) fail("mov_curves", "Mov_1 is not contained in Eff_1");

  if (j.contains("prime_divisors")) {
    const json& pd = j.at("prime_divisors");
    for (std::size_t i = 0; i < pd.size(); ++i) {
      const std::string at = "prime_divisors[" + std::to_string(i) + "]";
      LabeledClass c{read_string(field(pd[i], "label", at), at + ".label"),
                     read_vector(field(pd[i], "class", at), m.rho, at + ".class")};
      if (!m.eff_div.contains(c.cls)) fail(at, "class is not pseudo-effective");
      m.prime_divisors.push_back(std::move(c));
    }
  }
  if (j.contains("negative_curves")) {
    const json& nc = j.at("negative_curves");
    for (std::size_t i = 0; i < nc.size(); ++i) {
      const std::string at = "negative_curves[" + std::to_string(i) + "]";
      NegativeCurve c{read_string(field(nc[i], "label", at), at + ".label"),
                      read_vector(field(nc[i], "class", at), m.rho, at + ".class"),
                      read_rational(field(nc[i], "self_int", at), at + ".self_int")};
      if (!m.is_surface()) fail(at, "negative curves are only modelled on surfaces");
      if (c.self_int.sign() >= 0) fail(at, "self-intersection must be negative");
      if (pair(m.pairing, c.cls, c.cls) != c.self_int) fail(at, "self_int disagrees with the pairing");
      if (!m.eff_curves.contains(c.cls)) fail(at, "class is not pseudo-effective");
      m.negative_curves.push_back(std::move(c));
    }
  }

  const json& vol = field(j, "volume", "model");
  if (!vol.is_array() || vol.empty()) fail("volume", "expected a nonempty array of chambers");
  for (std::size_t i = 0; i < vol.size(); ++i) {
    const std::string at = "volume[" + std::to_string(i) + "]";
    auto rays = read_rays(vol[i], m.rho, at);
    m.volume_chambers.push_back({PolyhedralCone::from_rays(rays, qd),
                                 read_polynomial(field(vol[i], "poly", at), m.rho, at + ".poly")});
  }
  try {
    m.volume_root = ConeFunction::power_polynomial(m.eff_div, m.volume_chambers, m.dim);
  } catch (const ModelError& e) {
    fail("volume", e.what());
  } catch (const ContractError& e) {
    fail("volume", e.what());
  }

  const json& profiles = field(j, "profiles", "model");
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const std::string at = "profiles[" + std::to_string(i) + "]";
    const json& pj = profiles[i];
    PointProfile p;
    p.name = read_string(field(pj, "name", at), at + ".name");
    if (pj.contains("lies_on")) p.lies_on = read_strings(pj.at("lies_on"), at + ".lies_on");
    if (pj.contains("provenance")) p.provenance = read_string(pj.at("provenance"), at + ".provenance");
    const json& bj = field(pj, "blowup", at);
    p.blowup.pairing = read_matrix(field(bj, "pairing", at + ".blowup"), m.rho + 1, at + ".blowup.pairing");
    const RationalMatrix yq = p.blowup.pairing;
    if (yq.determinant().is_zero()) fail(at + ".blowup.pairing", "degenerate pairing");
    p.blowup.nef = read_cone(bj, "nef", yq.transpose(), at + ".blowup");
    p.blowup.eff_div = read_cone(bj, "eff_div", yq.transpose(), at + ".blowup");
    p.blowup.eff_curves = read_cone(bj, "eff_curves", yq, at + ".blowup");
    p.blowup.mov_curves = read_cone(bj, "mov_curves", yq, at + ".blowup");
    if (pj.contains("curves_through_x")) {
      p.curves_through_x = read_incidences(pj.at("curves_through_x"), m.rho, at + ".curves_through_x");
    }
    if (pj.contains("divisors_through_x")) {
      p.divisors_through_x = read_incidences(pj.at("divisors_through_x"), m.rho, at + ".divisors_through_x");
    }
    validate_blowup(m, p, at);
    for (const auto& q : m.profiles) {
      if (q.name == p.name) fail(at + ".name", "duplicate profile '" + p.name + "'");
    }
    m.profiles.push_back(std::move(p));
  }
  if (std::none_of(m.profiles.begin(), m.profiles.end(), [](const PointProfile& p) { return p.name == "generic"; })) {
    fail("profiles", "the 'generic' profile is mandatory");
  }

  if (j.contains("vanishing_cases")) {
    const json& vc = j.at("vanishing_cases");
    for (std::size_t i = 0; i < vc.size(); ++i) {
      const std::string at = "vanishing_cases[" + std::to_string(i) + "]";
      VanishingCase c;
      c.alpha = read_vector(field(vc[i], "alpha", at), m.rho, at + ".alpha");
      c.enk_divisorial = read_strings(field(vc[i], "enk_divisorial", at), at + ".enk_divisorial");
      if (vc[i].contains("note")) c.note = read_string(vc[i].at("note"), at + ".note");
      m.vanishing_cases.push_back(std::move(c));
    }
  }
  if (j.contains("golden")) {
    const json& g = j.at("golden");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string at = "golden[" + std::to_string(i) + "]";
      GoldenValue v;
      v.op = read_string(field(g[i], "op", at), at + ".op");
      v.profile = g[i].contains("profile") ? read_string(g[i].at("profile"), at + ".profile") : "generic";
      v.cls = read_vector(field(g[i], "class", at), m.rho, at + ".class");
      v.expected = read_rational(field(g[i], "expected", at), at + ".expected");
      if (g[i].contains("note")) v.note = read_string(g[i].at("note"), at + ".note");
      m.golden.push_back(std::move(v));
    }
  }
  if (j.contains("provenance")) m.provenance = read_string(j.at("provenance"), "provenance");

  // volume versus the top self-intersection on nef classes, and versus the
  // Zariski decomposition on big classes of surfaces
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 20; ++i) {
    const RationalVector l = random_point(m.nef, rng);
    const Interval root = m.volume_root.evaluate(l);
    const Rational top = m.top_intersection(l);
    if (!(root.lo.pow(m.dim) <= top && top <= root.hi.pow(m.dim))) {
      fail("volume", "chamber polynomial disagrees with L^n at nef class " + l.str());
    }
  }
  if (m.is_surface()) {
    for (int i = 0; i < 20; ++i) {
      const RationalVector l = random_point(m.eff_div, rng, 0.0);
      const auto z = zariski_decompose(m, l);
      const Rational p2 = pair(m.pairing, z.positive, z.positive);
      Rational chamber;
      bool found = false;
      for (const auto& c : m.volume_chambers) {
        if (c.chamber.contains(l)) {
          chamber = c.poly(l);
          found = true;
          break;
        }
      }
      if (!found || chamber != p2) fail("volume", "chamber polynomial disagrees with P(L)^2 at " + l.str());
    }
  }
  return m;
}

VarietyModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(path.string() + ": cannot open model file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return load_model(ss.str());
  } catch (const ModelError& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

RationalVector pullback_div(const BlowupModel& b, const RationalVector& l) {
  if (l.size() + 1 != b.pairing.rows()) throw ContractError("pullback_div: class has the wrong dimension");
  return l.extended(0);
}

RationalVector pullback_curve(const BlowupModel& b, const RationalVector& alpha) {
  if (alpha.size() + 1 != b.pairing.cols()) throw ContractError("pullback_curve: class has the wrong dimension");
  return alpha.extended(0);
}

RationalVector exceptional_divisor(const BlowupModel& b) {
  return RationalVector::unit(b.pairing.rows(), b.pairing.rows() - 1);
}

RationalVector exceptional_curve_class(const BlowupModel& b) {
  return -RationalVector::unit(b.pairing.cols(), b.pairing.cols() - 1);
}

RationalVector ZariskiDecomposition::negative() const {
  RationalVector n(positive.size());
  for (const auto& p : negative_support) n += p.cls * p.coef;
  return n;
}

ZariskiDecomposition zariski_decompose(const VarietyModel& m, const RationalVector& l) {
  if (!m.is_surface()) throw UnsupportedError("Zariski decomposition is only implemented on surfaces");
  if (l.size() != m.rho) throw ContractError("zariski_decompose: class has the wrong dimension");
  if (!m.eff_div.contains(l)) throw PreconditionError("zariski_decompose: " + l.str() + " is not pseudo-effective");
  const auto& curves = m.negative_curves;
  std::vector<std::size_t> support;
  RationalVector coef;
  RationalVector p = l;
  for (std::size_t round = 0; round <= curves.size(); ++round) {
    bool grew = false;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (std::find(support.begin(), support.end(), i) != support.end()) continue;
      if (pair(m.pairing, p, curves[i].cls).sign() < 0) {
        support.push_back(i);
        grew = true;
      }
    }
    if (!grew) break;
    std::sort(support.begin(), support.end(),
              [&](std::size_t a, std::size_t b) { return curves[a].label < curves[b].label; });
    const std::size_t k = support.size();
    RationalMatrix g(k, k);
    RationalVector rhs(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) g(a, b) = pair(m.pairing, curves[support[b]].cls, curves[support[a]].cls);
      rhs[a] = pair(m.pairing, l, curves[support[a]].cls);
    }
    // negative definite: leading principal minors of -G are positive
    for (std::size_t s = 1; s <= k; ++s) {
      RationalMatrix minor(s, s);
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) minor(a, b) = -g(a, b);
      if (minor.determinant().sign() <= 0) {
        throw ModelError("Zariski decomposition of " + l.str() + ": Gram matrix of the support is not negative definite");
      }
    }
    auto c = solve_linear(g, rhs);
    if (!c) throw ModelError("Zariski decomposition of " + l.str() + ": singular support system");
    coef = *c;
    p = l;
    for (std::size_t a = 0; a < k; ++a) {
      if (coef[a].sign() < 0) {
        throw ModelError("Zariski decomposition of " + l.str() + ": negative coefficient on " + curves[support[a]].label);
      }
      p -= curves[support[a]].cls * coef[a];
    }
  }
  for (const auto& c : curves) {
    if (pair(m.pairing, p, c.cls).sign() < 0) {
      throw ModelError("Zariski decomposition of " + l.str() + " did not reach a fixpoint (curve " + c.label + ")");
    }
  }
  ZariskiDecomposition z;
  z.positive = p;
  for (std::size_t a = 0; a < support.size(); ++a) {
    if (coef[a].sign() > 0) z.negative_support.push_back({curves[support[a]].label, curves[support[a]].cls, coef[a]});
  }
  return z;
}

Rational volume(const VarietyModel& m, const RationalVector& l) {
  if (l.size() != m.rho) throw ContractError("volume: class has the wrong dimension");
  if (!m.eff_div.contains(l)) throw PreconditionError("volume: " + l.str() + " is not pseudo-effective");
  if (m.is_surface()) {
    const auto z = zariski_decompose(m, l);
    return pair(m.pairing, z.positive, z.positive);
  }
  for (const auto& c : m.volume_chambers) {
    if (c.chamber.contains(l)) return c.poly(l);
  }
  throw ModelError("volume: no chamber contains " + l.str());
}

RationalVector curve_power(const VarietyModel& m, const RationalVector& l) {
  if (l.size() != m.rho) throw ContractError("curve_power: class has the wrong dimension");
  const RationalVector grad = m.top_intersection.gradient(l) / Rational(static_cast<long>(m.dim));
  auto g = solve_linear(m.pairing, grad);
  if (!g) throw ModelError("curve_power: pairing system is inconsistent");
  return *g;
}

}  // namespace conepolar
