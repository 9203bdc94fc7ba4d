#include "conepolar/hconc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "conepolar/lp.hpp"

namespace conepolar {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  std::map<std::vector<unsigned>, Rational> merged;
  for (auto& t : terms) {
    if (t.exp.size() != nvars) throw ContractError("polynomial term has the wrong number of exponents");
    merged[t.exp] += t.coef;
  }
  for (auto& [e, c] : merged) {
    if (!c.is_zero()) terms_.push_back({e, c});
  }
}

unsigned Polynomial::homogeneous_degree() const {
  if (terms_.empty()) throw ContractError("zero polynomial has no degree");
  auto deg = [](const Term& t) {
    unsigned s = 0;
    for (auto e : t.exp) s += e;
    return s;
  };
  const unsigned d = deg(terms_.front());
  for (const auto& t : terms_) {
    if (deg(t) != d) throw ContractError("polynomial is not homogeneous");
  }
  return d;
}

Rational Polynomial::operator()(const RationalVector& v) const {
  if (v.size() != nvars_) throw ContractError("polynomial evaluated at a vector of the wrong dimension");
  mpq_class acc = 0;
  for (const auto& t : terms_) {
    mpq_class m = t.coef.raw();
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < t.exp[i]; ++k) m *= v[i].raw();
    }
    acc += m;
  }
  return Rational(acc);
}

RationalVector Polynomial::gradient(const RationalVector& v) const {
  if (v.size() != nvars_) throw ContractError("polynomial gradient at a vector of the wrong dimension");
  RationalVector g(nvars_);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      mpq_class m = t.coef.raw() * t.exp[i];
      for (std::size_t j = 0; j < nvars_; ++j) {
        const unsigned e = j == i ? t.exp[j] - 1 : t.exp[j];
        for (unsigned k = 0; k < e; ++k) m *= v[j].raw();
      }
      g[i] += Rational(m);
    }
  }
  return g;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

const char* to_string(FunctionKind k) {
  switch (k) {
    case FunctionKind::linear: return "linear";
    case FunctionKind::piecewise_linear: return "piecewise_linear";
    case FunctionKind::power_polynomial: return "power_polynomial";
    case FunctionKind::exit_based: return "exit_based";
    case FunctionKind::polar_of: return "polar_of";
    case FunctionKind::callable: return "callable";
  }
  return "?";
}

// ------------------------------------------------------------------ helpers

namespace {

std::vector<RationalVector> standard_constraints(const PolyhedralCone& c) {
  std::vector<RationalVector> out;
  for (const auto& f : c.facets()) out.push_back(c.normal(f));
  for (const auto& e : c.equations()) {
    out.push_back(c.normal(e));
    out.push_back(-c.normal(e));
  }
  return out;
}

PolyhedralCone intersect(const PolyhedralCone& a, const PolyhedralCone& b) {
  auto cons = standard_constraints(a);
  auto more = standard_constraints(b);
  cons.insert(cons.end(), more.begin(), more.end());
  return PolyhedralCone::from_facets(cons, a.ambient_dim());
}

bool proportional_positive(const RationalVector& a, const RationalVector& b) {
  return primitive(a) == primitive(b) && !a.is_zero();
}

// Every chamber facet is either on the domain boundary or faces another
// chamber across it.
template <class Piece>
void check_cover(const PolyhedralCone& domain, const std::vector<Piece>& pieces) {
  if (pieces.empty()) throw ModelError("function has no chambers");
  for (const auto& p : pieces) {
    if (p.chamber.ambient_dim() != domain.ambient_dim()) throw ContractError("chamber dimension mismatch");
    if (!domain.contains(p.chamber)) throw ModelError("chamber leaves the domain");
  }
  if (!domain.full_dimensional()) return;
  std::vector<RationalVector> boundary;
  for (const auto& f : domain.facets()) boundary.push_back(domain.normal(f));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& c = pieces[i].chamber;
    if (!c.full_dimensional()) throw ModelError("chamber is not full-dimensional");
    for (const auto& f : c.facets()) {
      const RationalVector n = c.normal(f);
      if (std::any_of(boundary.begin(), boundary.end(),
                      [&](const RationalVector& b) { return proportional_positive(b, n); })) {
        continue;
      }
      std::vector<RationalVector> probe;
      RationalVector centre(c.ambient_dim());
      for (const auto& r : c.rays()) {
        if (c.pair(f, r).is_zero()) {
          probe.push_back(r);
          centre += r;
        }
      }
      probe.push_back(centre);
      for (const auto& pt : probe) {
        bool covered = false;
        for (std::size_t j = 0; j < pieces.size() && !covered; ++j) {
          if (j == i) continue;
          const auto& o = pieces[j].chamber;
          bool faces = false;
          for (const auto& g : o.facets()) faces = faces || proportional_positive(o.normal(g), -n);
          covered = faces && o.contains(pt);
        }
        if (!covered) {
          throw ModelError("chamber gap: facet " + n.str() + " of chamber " + std::to_string(i) +
                           " is not matched by a neighbouring chamber");
        }
      }
    }
  }
}

std::string fmt_interval(const Interval& x) { return x.str(); }

double ddot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

// -------------------------------------------------------------------- Impl

struct ConeFunction::Impl {
  FunctionKind kind = FunctionKind::linear;
  PolyhedralCone domain;
  std::string name;

  // piecewise linear (linear, piecewise_linear, exit_based, polar of those)
  std::vector<LinearPiece> pieces;
  std::vector<RationalVector> min_forms;  // nonempty when f = min of these forms
  bool pl = false;

  // power polynomial
  std::vector<PolynomialPiece> poly_pieces;
  unsigned root = 1;
  struct Approx {
    std::vector<std::vector<double>> normals;
    std::vector<std::pair<std::vector<unsigned>, double>> terms;
  };
  std::vector<Approx> approx_pieces;

  // exit based
  PolyhedralCone target;
  RationalMatrix base_map;
  RationalVector dir;

  // polar of a non piecewise-linear function
  std::optional<ConeFunction> inner;
  PolarOptions options;
  mutable std::map<RationalVector, PolarValue> cache;

  std::function<Rational(const RationalVector&)> fn;

  const PolarValue& inner_polar(const RationalVector& w) const {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, polar_eval(*inner, w, options)).first;
    return it->second;
  }
};

namespace {

std::vector<LinearPiece> chambers_of_min(const PolyhedralCone& domain, const std::vector<RationalVector>& forms) {
  const auto base = standard_constraints(domain);
  std::vector<LinearPiece> out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto cons = base;
    for (std::size_t j = 0; j < forms.size(); ++j) {
      if (j != i) cons.push_back(forms[j] - forms[i]);
    }
    PolyhedralCone c = PolyhedralCone::from_facets(cons, domain.ambient_dim());
    if (c.dimension() != domain.dimension() || c.rays().empty()) continue;
    out.push_back({c, forms[i]});
  }
  return out;
}

}  // namespace

ConeFunction ConeFunction::linear(PolyhedralCone domain, RationalVector form) {
  if (form.size() != domain.ambient_dim()) throw ContractError("linear form dimension mismatch");
  auto impl = std::make_shared<Impl>();
  impl->kind = FunctionKind::linear;
  impl->domain = domain;
  impl->pl = true;
  impl->min_forms = {form};
  impl->pieces = {{domain, form}};
  ConeFunction f;
  f.impl_ = impl;
  return f;
}

ConeFunction ConeFunction::min_of_linear(PolyhedralCone domain, std::vector<RationalVector> forms) {
  if (forms.empty()) throw ContractError("min of no linear forms");
  for (const auto& f : forms) {
    if (f.size() != domain.ambient_dim()) throw ContractError("linear form dimension mismatch");
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  auto impl = std::make_shared<Impl>();
  impl->kind = FunctionKind::piecewise_linear;
  impl->domain = domain;
  impl->pl = true;
  impl->pieces = chambers_of_min(domain, forms);
  for (const auto& p : impl->pieces) impl->min_forms.push_back(p.form);
  ConeFunction f;
  f.impl_ = impl;
  return f;
}

ConeFunction ConeFunction::piecewise_linear(PolyhedralCone domain, std::vector<LinearPiece> chambers) {
  check_cover(domain, chambers);
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    if (chambers[i].form.size() != domain.ambient_dim()) throw ContractError("linear form dimension mismatch");
    for (std::size_t j = i + 1; j < chambers.size(); ++j) {
      const PolyhedralCone x = intersect(chambers[i].chamber, chambers[j].chamber);
      for (const auto& r : x.rays()) {
        if (dot(chambers[i].form, r) != dot(chambers[j].form, r)) {
          throw ModelError("linear pieces disagree at " + r.str());
        }
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = FunctionKind::piecewise_linear;
  impl->domain = domain;
  impl->pl = true;
  impl->pieces = std::move(chambers);
  ConeFunction f;
  f.impl_ = impl;
  return f;
}

ConeFunction ConeFunction::power_polynomial(PolyhedralCone domain, std::vector<PolynomialPiece> chambers,
                                            unsigned root) {
  if (root == 0) throw ContractError("root must be positive");
  check_cover(domain, chambers);
  for (const auto& c : chambers) {
    if (c.poly.nvars() != domain.ambient_dim()) throw ContractError("polynomial has the wrong number of variables");
    if (c.poly.homogeneous_degree() != root) throw ContractError("polynomial degree differs from the root");
    for (const auto& r : c.chamber.rays()) {
      if (c.poly(r).sign() < 0) throw ModelError("polynomial is negative at chamber ray " + r.str());
    }
  }
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    for (std::size_t j = i + 1; j < chambers.size(); ++j) {
      const PolyhedralCone x = intersect(chambers[i].chamber, chambers[j].chamber);
      std::vector<RationalVector> probe = x.rays();
      for (std::size_t a = 0; a < x.rays().size(); ++a) {
        for (std::size_t b = 0; b < x.rays().size(); ++b) {
          if (a != b) probe.push_back(x.rays()[a] + x.rays()[b] * 2);
        }
      }
      if (!x.rays().empty()) probe.push_back(x.interior_point());
      for (const auto& p : probe) {
        if (chambers[i].poly(p) != chambers[j].poly(p)) throw ModelError("polynomial pieces disagree at " + p.str());
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = FunctionKind::power_polynomial;
  impl->domain = domain;
  impl->poly_pieces = std::move(chambers);
  impl->root = root;
  for (const auto& p : impl->poly_pieces) {
    Impl::Approx a;
    for (const auto& f : p.chamber.facets()) a.normals.push_back(p.chamber.normal(f).to_doubles());
    for (const auto& t : p.poly.terms()) a.terms.emplace_back(t.exp, t.coef.to_double());
    impl->approx_pieces.push_back(std::move(a));
  }
  ConeFunction f;
  f.impl_ = impl;
  return f;
}

ConeFunction ConeFunction::exit_based(PolyhedralCone domain, PolyhedralCone target, RationalMatrix base_map,
                                      RationalVector dir) {
  if (base_map.rows() != target.ambient_dim() || base_map.cols() != domain.ambient_dim() ||
      dir.size() != target.ambient_dim()) {
    throw ContractError("exit_based: dimension mismatch");
  }
  for (const auto& r : domain.rays()) {
    if (!target.contains(base_map * r)) {
      throw PreconditionError("exit_based: image of domain ray " + r.str() + " leaves the target cone");
    }
  }
  std::vector<RationalVector> forms;
  const bool pinned = std::any_of(target.equations().begin(), target.equations().end(),
                                  [&](const RationalVector& e) { return !target.pair(e, dir).is_zero(); });
  if (pinned) {
    forms.push_back(RationalVector(domain.ambient_dim()));
  } else {
    const RationalMatrix bt = base_map.transpose();
    for (const auto& g : target.facets()) {
      const Rational gd = target.pair(g, dir);
      if (gd.sign() >= 0) continue;
      forms.push_back(bt * target.normal(g) * (Rational(-1) / gd));
    }
  }
  if (forms.empty()) throw UnsupportedError("exit_based: the direction never leaves the target cone");
  ConeFunction pl = min_of_linear(domain, forms);
  auto impl = std::make_shared<Impl>(*pl.impl_);
  impl->kind = FunctionKind::exit_based;
  impl->target = std::move(target);
  impl->base_map = std::move(base_map);
  impl->dir = std::move(dir);
  ConeFunction f;
  f.impl_ = impl;
  return f;
}

ConeFunction ConeFunction::polar_of(const ConeFunction& inner, PolarOptions options) {
  const PolyhedralCone& d = inner.domain();
  auto impl = std::make_shared<Impl>();
  impl->kind = FunctionKind::polar_of;
  impl->domain = dual_cone(d);
  impl->options = options;
  if (inner.is_piecewise_linear() && !options.force_numeric) {
    std::vector<RationalVector> forms;
    for (const auto& r : inner.breakpoint_rays()) {
      const Rational fr = inner.evaluate_exact(r);
      if (fr.sign() > 0) forms.push_back(d.pairing() * r / fr);
    }
    if (forms.empty()) throw PreconditionError("polar of a function vanishing on its whole domain");
    ConeFunction pl = min_of_linear(impl->domain, forms);
    impl->pl = true;
    impl->pieces = pl.impl_->pieces;
    impl->min_forms = pl.impl_->min_forms;
  } else {
    impl->inner = inner;
  }
  ConeFunction f;
  f.impl_ = impl;
  return f;
}

ConeFunction ConeFunction::callable(PolyhedralCone domain, std::function<Rational(const RationalVector&)> fn,
                                    std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->kind = FunctionKind::callable;
  impl->domain = std::move(domain);
  impl->fn = std::move(fn);
  impl->name = std::move(name);
  ConeFunction f;
  f.impl_ = impl;
  return f;
}

FunctionKind ConeFunction::kind() const { return impl_->kind; }
const PolyhedralCone& ConeFunction::domain() const { return impl_->domain; }
bool ConeFunction::is_exact() const { return impl_->pl || impl_->kind == FunctionKind::callable; }
bool ConeFunction::is_piecewise_linear() const { return impl_->pl; }

std::string ConeFunction::describe() const {
  std::ostringstream os;
  os << to_string(impl_->kind);
  if (!impl_->name.empty()) os << " '" << impl_->name << "'";
  os << " on a " << impl_->domain.dimension() << "-dimensional cone";
  if (impl_->pl) os << " with " << impl_->pieces.size() << " linear chambers";
  if (impl_->kind == FunctionKind::power_polynomial) os << " (root " << impl_->root << ")";
  return os.str();
}

Interval ConeFunction::evaluate(const RationalVector& v) const {
  const Impl& im = *impl_;
  const auto m = membership(im.domain, v);
  if (m.status == MembershipStatus::outside) {
    throw PreconditionError("point " + v.str() + " is outside the domain (violates " +
                            (m.witness ? m.witness->str() : std::string("?")) + ")");
  }
  if (im.kind == FunctionKind::exit_based) {
    auto t = exit_parameter(im.target, im.base_map * v, im.dir);
    return Interval::point(*t);
  }
  if (im.pl) {
    if (!im.min_forms.empty()) {
      Rational best = dot(im.min_forms.front(), v);
      for (const auto& f : im.min_forms) best = min(best, dot(f, v));
      return Interval::point(best);
    }
    for (const auto& p : im.pieces) {
      if (p.chamber.contains(v)) return Interval::point(dot(p.form, v));
    }
    throw ModelError("no linearity chamber contains " + v.str());
  }
  switch (im.kind) {
    case FunctionKind::power_polynomial:
      for (const auto& p : im.poly_pieces) {
        if (!p.chamber.contains(v)) continue;
        const Rational x = p.poly(v);
        if (x.sign() < 0) throw ModelError("polynomial is negative at " + v.str());
        return nth_root(x, im.root);
      }
      throw ModelError("no chamber contains " + v.str());
    case FunctionKind::polar_of: {
      const PolarValue& pv = im.inner_polar(v);
      return pv.value;
    }
    case FunctionKind::callable:
      return Interval::point(im.fn(v));
    default:
      break;
  }
  throw UnsupportedError("cannot evaluate " + describe());
}

Rational ConeFunction::evaluate_exact(const RationalVector& v) const {
  const Interval x = evaluate(v);
  if (!x.is_exact()) throw UnsupportedError("value at " + v.str() + " is not an exact rational: " + x.str());
  return x.lo;
}

std::optional<double> ConeFunction::approx(const std::vector<double>& v) const {
  const Impl& im = *impl_;
  if (im.pl && !im.min_forms.empty()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : im.min_forms) best = std::min(best, ddot(f.to_doubles(), v));
    return best;
  }
  if (im.kind == FunctionKind::power_polynomial) {
    // the chamber the point is deepest inside
    std::size_t best = 0;
    double depth = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < im.approx_pieces.size(); ++i) {
      double mn = std::numeric_limits<double>::infinity();
      for (const auto& n : im.approx_pieces[i].normals) mn = std::min(mn, ddot(n, v));
      if (mn > depth) {
        depth = mn;
        best = i;
      }
    }
    double p = 0;
    for (const auto& [e, c] : im.approx_pieces[best].terms) {
      double m = c;
      for (std::size_t i = 0; i < e.size(); ++i) m *= std::pow(v[i], static_cast<double>(e[i]));
      p += m;
    }
    return std::pow(std::max(p, 0.0), 1.0 / static_cast<double>(im.root));
  }
  if (im.pl || im.kind == FunctionKind::callable) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = from_double(v[i]);
    if (!impl_->domain.contains(r)) return std::nullopt;
    return evaluate(r).mid().to_double();
  }
  return std::nullopt;
}

const std::vector<LinearPiece>& ConeFunction::linear_chambers() const { return impl_->pieces; }

std::vector<RationalVector> ConeFunction::breakpoint_rays() const {
  std::vector<RationalVector> out = impl_->domain.rays();
  for (const auto& p : impl_->pieces) out.insert(out.end(), p.chamber.rays().begin(), p.chamber.rays().end());
  for (const auto& p : impl_->poly_pieces) out.insert(out.end(), p.chamber.rays().begin(), p.chamber.rays().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RationalVector> ConeFunction::majorants(const RationalVector& v) const {
  const Impl& im = *impl_;
  std::vector<RationalVector> out;
  if (im.pl) {
    if (!im.min_forms.empty()) {
      const Rational fv = evaluate_exact(v);
      for (const auto& f : im.min_forms) {
        if (dot(f, v) == fv) out.push_back(f);
      }
    } else {
      for (const auto& p : im.pieces) {
        if (p.chamber.contains(v)) out.push_back(p.form);
      }
    }
    return out;
  }
  if (im.kind == FunctionKind::power_polynomial) {
    for (const auto& p : im.poly_pieces) {
      if (!p.chamber.contains(v)) continue;
      const Rational x = p.poly(v);
      if (x.sign() <= 0) continue;
      // p^(1/n) has gradient p^(1/n) grad p / (n p); an upper bound on the
      // root keeps the form above the function on the cone
      const Rational hi = nth_root(x, im.root, 96).hi;
      out.push_back(p.poly.gradient(v) * (hi / (x * Rational(static_cast<long>(im.root)))));
    }
    return out;
  }
  if (im.kind == FunctionKind::polar_of) {
    const PolarValue& pv = im.inner_polar(v);
    if (pv.argmin) {
      const Rational g = im.inner->evaluate(*pv.argmin).lo;
      if (g.sign() > 0) out.push_back(im.inner->domain().pairing() * *pv.argmin / g);
    }
  }
  return out;
}

// ------------------------------------------------------------- polar_eval

namespace {

PolarValue exact_polar(const ConeFunction& f, const RationalVector& aw) {
  PolarValue out;
  std::optional<Rational> best;
  for (const auto& r : f.breakpoint_rays()) {
    const Rational fr = f.evaluate_exact(r);
    if (fr.sign() <= 0) continue;
    const Rational q = dot(aw, r) / fr;
    if (!best || q < *best) {
      best = q;
      out.argmin = r;
    }
  }
  if (!best) throw PreconditionError("polar of a function vanishing on its whole domain");
  out.value = Interval::point(*best);
  return out;
}

// Minimizes t -> g(t) over [lo, hi] for quasi-convex g.
template <class G>
double ternary(G&& g, double lo, double hi, int iterations) {
  for (int i = 0; i < iterations && hi - lo > 1e-15; ++i) {
    const double m1 = lo + (hi - lo) * 0.381966011250105;
    const double m2 = hi - (hi - lo) * 0.381966011250105;
    if (g(m1) <= g(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return 0.5 * (lo + hi);
}

// Floating-point minimizer of <w, v> / f(v) on a cross-section of a full
// domain of dimension 2 or 3. The ratio is quasi-convex there, and so is
// its partial minimum along one coordinate.
std::optional<std::vector<double>> approximate_minimizer(const ConeFunction& f, const RationalVector& aw) {
  const PolyhedralCone& d = f.domain();
  const std::size_t k = d.ambient_dim();
  if (!d.full_dimensional() || (k != 2 && k != 3)) return std::nullopt;
  if (!f.approx(d.interior_point().to_doubles())) return std::nullopt;
  RationalVector u(k);
  for (const auto& fa : d.facets()) u += d.normal(fa);
  std::vector<std::vector<double>> verts;
  for (const auto& r : d.rays()) {
    auto v = r.to_doubles();
    const double s = dot(u, r).to_double();
    for (auto& x : v) x /= s;
    verts.push_back(v);
  }
  const auto a = aw.to_doubles();
  auto ratio = [&](const std::vector<double>& v) {
    const auto fv = f.approx(v);
    if (!fv || *fv <= 0) return std::numeric_limits<double>::infinity();
    return ddot(a, v) / *fv;
  };
  if (k == 2) {
    auto point = [&](double t) {
      return std::vector<double>{(1 - t) * verts[0][0] + t * verts[1][0], (1 - t) * verts[0][1] + t * verts[1][1]};
    };
    return point(ternary([&](double t) { return ratio(point(t)); }, 0.0, 1.0, 90));
  }
  // k == 3: coordinates (s, t) in the plane of the cross-section
  std::vector<double> c(3, 0.0);
  for (const auto& v : verts)
    for (int i = 0; i < 3; ++i) c[i] += v[i] / static_cast<double>(verts.size());
  std::vector<double> e1(3), e2(3);
  for (int i = 0; i < 3; ++i) e1[i] = verts[0][i] - c[i];
  const double n1 = std::sqrt(ddot(e1, e1));
  for (auto& x : e1) x /= n1;
  std::size_t j = 1;
  for (; j < verts.size(); ++j) {
    for (int i = 0; i < 3; ++i) e2[i] = verts[j][i] - c[i];
    const double pr = ddot(e2, e1);
    for (int i = 0; i < 3; ++i) e2[i] -= pr * e1[i];
    if (ddot(e2, e2) > 1e-20) break;
  }
  const double n2 = std::sqrt(ddot(e2, e2));
  for (auto& x : e2) x /= n2;
  std::vector<std::pair<double, double>> poly;
  for (const auto& v : verts) {
    std::vector<double> dv(3);
    for (int i = 0; i < 3; ++i) dv[i] = v[i] - c[i];
    poly.emplace_back(ddot(dv, e1), ddot(dv, e2));
  }
  std::sort(poly.begin(), poly.end(), [](const auto& p, const auto& q) {
    return std::atan2(p.second, p.first) < std::atan2(q.second, q.first);
  });
  double smin = poly[0].first, smax = poly[0].first;
  for (const auto& p : poly) {
    smin = std::min(smin, p.first);
    smax = std::max(smax, p.first);
  }
  auto trange = [&](double s) {
    double tlo = std::numeric_limits<double>::infinity(), thi = -tlo;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % poly.size()];
      const double lo = std::min(p.first, q.first), hi = std::max(p.first, q.first);
      if (s < lo || s > hi) continue;
      const double t = hi - lo < 1e-300 ? p.second : p.second + (q.second - p.second) * (s - p.first) / (q.first - p.first);
      tlo = std::min(tlo, t);
      thi = std::max(thi, t);
      if (hi - lo < 1e-300) {
        tlo = std::min(tlo, q.second);
        thi = std::max(thi, q.second);
      }
    }
    return std::make_pair(tlo, thi);
  };
  auto point = [&](double s, double t) {
    std::vector<double> v(3);
    for (int i = 0; i < 3; ++i) v[i] = c[i] + s * e1[i] + t * e2[i];
    return v;
  };
  auto inner = [&](double s) {
    const auto [tlo, thi] = trange(s);
    if (!(tlo <= thi)) return std::make_pair(std::numeric_limits<double>::infinity(), 0.0);
    const double t = ternary([&](double t) { return ratio(point(s, t)); }, tlo, thi, 70);
    return std::make_pair(ratio(point(s, t)), t);
  };
  const double s = ternary([&](double s) { return inner(s).first; }, smin, smax, 70);
  return point(s, inner(s).second);
}

PolarValue numeric_polar(const ConeFunction& f, const RationalVector& aw, const PolarOptions& opt) {
  const PolyhedralCone& d = f.domain();
  const auto& rays = d.rays();
  const std::size_t m = rays.size();
  RationalVector a_rays(m);
  for (std::size_t i = 0; i < m; ++i) a_rays[i] = dot(aw, rays[i]);

  std::vector<RationalVector> cuts;
  std::optional<Rational> hi;
  std::optional<RationalVector> argmin;
  const RationalVector centre = d.interior_point();

  auto visit = [&](const RationalVector& p) -> bool {
    if (!d.contains(p)) return false;
    const Interval fp = f.evaluate(p);
    if (fp.lo.sign() <= 0) return false;
    const Rational q = dot(aw, p) / fp.lo;
    if (!hi || q < *hi) {
      hi = q;
      argmin = p;
    }
    for (auto& s : f.majorants(p)) {
      if (std::find(cuts.begin(), cuts.end(), s) == cuts.end()) cuts.push_back(std::move(s));
    }
    return true;
  };

  for (const auto& r : f.breakpoint_rays()) visit(r);
  visit(centre);

  // w on the boundary of the dual: the value is 0 exactly when f is positive
  // on the face w vanishes on, and then it is positive at the face's centre
  RationalVector face(d.ambient_dim());
  for (std::size_t i = 0; i < m; ++i) {
    if (a_rays[i].is_zero()) face += rays[i];
  }
  if (!face.is_zero() && visit(face) && hi->is_zero()) return {Interval::point(0), argmin, false};

  // a floating-point minimizer plus a stencil around it usually certifies
  // the value with a single LP
  if (auto vstar = approximate_minimizer(f, aw)) {
    RationalVector p(vstar->size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = round_to_dyadic(from_double((*vstar)[i]), 60);
    visit(p);
    Rational scale = 0;
    for (const auto& x : p) scale = max(scale, x.abs());
    for (const Rational& delta : {Rational(1, 1000), Rational(1, 100000), Rational(1, 10000000)}) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (int sgn : {1, -1}) {
          RationalVector q = p;
          q[i] += scale * delta * Rational(sgn);
          visit(q);
        }
      }
    }
  }

  Rational lo = 0;
  Rational pull = 1;
  unsigned stall = 0;
  for (unsigned it = 0; it < opt.max_iterations; ++it) {
    if (cuts.empty()) break;
    RationalMatrix a(m, cuts.size());
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < cuts.size(); ++j) a(i, j) = dot(cuts[j], rays[i]);
    }
    RationalVector ones(cuts.size());
    for (auto& x : ones) x = 1;
    const lp::Result res = lp::maximize_leq(a, a_rays, ones);
    if (res.status != lp::Status::optimal) break;
    const bool improved = res.value > lo;
    lo = max(lo, res.value);
    if (hi && *hi - lo <= opt.tol) break;
    // keep the LP small: drop cuts that carry no weight
    if (cuts.size() > 4 * m + 8) {
      std::vector<RationalVector> kept;
      for (std::size_t j = 0; j < cuts.size(); ++j) {
        if (res.x[j].sign() > 0) kept.push_back(cuts[j]);
      }
      cuts = std::move(kept);
    }
    // next point: the optimal primal point of the dual program, rounded
    Rational total = 0;
    for (const auto& mu : res.duals) total += mu;
    if (total.is_zero()) break;
    RationalVector p(d.ambient_dim());
    for (std::size_t i = 0; i < m; ++i) p += rays[i] * round_to_dyadic(res.duals[i] / total, 80);
    if (p.is_zero()) p = centre;
    const std::size_t before = cuts.size();
    const std::optional<Rational> old_hi = hi;
    // where f vanishes, cut at a point pulled towards the centre; the pull
    // shrinks every time this happens so the cuts approach the face
    bool ok = visit(p);
    for (unsigned k = 0; !ok && k < 200; ++k) {
      pull /= 2;
      ok = visit(p + centre * pull);
    }
    const bool progress = improved || cuts.size() > before || hi != old_hi;
    stall = progress ? 0 : stall + 1;
    if (stall >= 3) break;
  }
  PolarValue out;
  if (!hi) throw PreconditionError("polar of a function vanishing on its whole domain");
  out.value = {min(lo, *hi), *hi};
  out.argmin = argmin;
  return out;
}

}  // namespace

PolarValue polar_eval(const ConeFunction& f, const RationalVector& w, const PolarOptions& options) {
  const PolyhedralCone& d = f.domain();
  if (w.size() != d.pairing().rows()) {
    throw ContractError("polar_eval: dual vector of dimension " + std::to_string(w.size()) + ", expected " +
                        std::to_string(d.pairing().rows()));
  }
  const RationalVector aw = d.pairing().transpose() * w;
  for (const auto& r : d.rays()) {
    if (dot(aw, r).sign() < 0) {
      PolarValue out;
      out.value = Interval::point(0);
      out.outside_dual = true;
      return out;
    }
  }
  if (f.is_piecewise_linear() && !options.force_numeric) return exact_polar(f, aw);
  return numeric_polar(f, aw, options);
}

// ------------------------------------------------------------------ checks

RationalVector random_point(const PolyhedralCone& c, std::mt19937_64& rng, double boundary_fraction) {
  const auto& rays = c.rays();
  RationalVector p(c.ambient_dim());
  if (rays.empty()) return p;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<long> coef(1, 12);
  std::vector<bool> use(rays.size(), true);
  if (rays.size() > 1 && unit(rng) < boundary_fraction) {
    std::uniform_int_distribution<std::size_t> pick(0, rays.size() - 1);
    std::fill(use.begin(), use.end(), false);
    const std::size_t keep = 1 + pick(rng) % (rays.size() - 1);
    for (std::size_t k = 0; k < keep; ++k) use[pick(rng)] = true;
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (use[i]) p += rays[i] * Rational(coef(rng));
  }
  return p;
}

namespace {

constexpr std::size_t kMaxRecorded = 5;

void record(PropertyReport& r, const std::string& msg) {
  if (r.counterexamples.size() < kMaxRecorded) r.counterexamples.push_back(msg);
}

// a >= b up to tol, for enclosures
bool geq(const Interval& a, const Interval& b, const Rational& tol) { return a.hi + tol >= b.lo; }

}  // namespace

std::vector<PropertyReport> check_hconc(const ConeFunction& f, std::size_t samples, std::uint64_t seed,
                                        const Rational& tol) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 9), den(1, 5);
  const Rational t0 = f.is_exact() ? Rational(0) : tol;
  PropertyReport hom{"homogeneity", 0, {}};
  PropertyReport sup{"superadditivity", 0, {}};
  for (std::size_t i = 0; i < samples; ++i) {
    const RationalVector v = random_point(f.domain(), rng);
    const RationalVector w = random_point(f.domain(), rng);
    const Rational t(num(rng), den(rng));
    const Interval fv = f.evaluate(v);
    const Interval fw = f.evaluate(w);
    const Interval ftv = f.evaluate(v * t);
    const Interval fvw = f.evaluate(v + w);
    ++hom.samples;
    ++sup.samples;
    if (!geq(ftv, fv.scaled(t), t0) || !geq(fv.scaled(t), ftv, t0)) {
      record(hom, "f(" + t.str() + " * " + v.str() + ") = " + fmt_interval(ftv) + " but " + t.str() + " * f(v) = " +
                      fmt_interval(fv.scaled(t)));
    }
    if (!geq(fvw, fv + fw, t0)) {
      record(sup, "f(" + (v + w).str() + ") = " + fmt_interval(fvw) + " < f(" + v.str() + ") + f(" + w.str() +
                      ") = " + fmt_interval(fv + fw));
    }
  }
  return {hom, sup};
}

std::vector<PropertyReport> check_duality_transform(const ConeFunction& f, const ConeFunction& g,
                                                    std::size_t samples, std::uint64_t seed, const Rational& tol) {
  if (!(dual_cone(f.domain()) == g.domain())) throw ContractError("g is not defined on the dual cone of f's domain");
  std::mt19937_64 rng(seed);
  auto compare = [&](const ConeFunction& a, const ConeFunction& b, const std::string& name) {
    PropertyReport r{name, 0, {}};
    std::vector<RationalVector> pts = b.domain().rays();
    for (std::size_t i = 0; i < samples; ++i) pts.push_back(random_point(b.domain(), rng));
    for (const auto& w : pts) {
      ++r.samples;
      const Interval ha = polar_eval(a, w).value;
      const Interval bw = b.evaluate(w);
      if (!geq(ha, bw, tol) || !geq(bw, ha, tol)) {
        record(r, "at " + w.str() + ": transform " + fmt_interval(ha) + " vs " + fmt_interval(bw));
      }
    }
    return r;
  };
  return {compare(f, g, "transform of f equals g"), compare(g, f, "transform of g equals f")};
}

PropertyReport check_order_reversal(const ConeFunction& f1, const ConeFunction& f2, std::size_t samples,
                                    std::uint64_t seed, const Rational& tol) {
  if (!(f1.domain() == f2.domain())) throw ContractError("order reversal needs a common domain");
  std::mt19937_64 rng(seed);
  PropertyReport r{"order reversal", 0, {}};
  const PolyhedralCone dual = dual_cone(f1.domain());
  for (std::size_t i = 0; i < samples; ++i) {
    const RationalVector v = random_point(f1.domain(), rng);
    if (!geq(f2.evaluate(v), f1.evaluate(v), tol)) record(r, "hypothesis f1 <= f2 fails at " + v.str());
    const RationalVector w = random_point(dual, rng);
    ++r.samples;
    const Interval h1 = polar_eval(f1, w).value;
    const Interval h2 = polar_eval(f2, w).value;
    if (!geq(h1, h2, tol)) {
      record(r, "at " + w.str() + ": transform of f1 " + fmt_interval(h1) + " < transform of f2 " + fmt_interval(h2));
    }
  }
  return r;
}

}  // namespace conepolar
