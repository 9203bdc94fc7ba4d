#include "conepolar/cones.hpp"

#include <algorithm>

namespace conepolar {

namespace {

void sort_unique(std::vector<RationalVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<RationalVector> canonical(const std::vector<RationalVector>& in, std::size_t dim) {
  std::vector<RationalVector> out;
  for (const auto& v : in) {
    if (v.size() != dim) {
      throw ContractError("cone generator " + v.str() + " has dimension " + std::to_string(v.size()) +
                          ", expected " + std::to_string(dim));
    }
    if (!v.is_zero()) out.push_back(primitive(v));
  }
  sort_unique(out);
  return out;
}

void check_pairing(const RationalMatrix& q) {
  if (!q.is_square() || q.rows() == 0) throw ContractError("cone pairing must be a nonempty square matrix");
  if (q.determinant().is_zero()) throw ContractError("cone pairing is degenerate");
}

}  // namespace

DoubleDescription double_description(std::size_t dim, const std::vector<RationalVector>& constraints) {
  std::vector<RationalVector> lin;
  for (std::size_t i = 0; i < dim; ++i) lin.push_back(RationalVector::unit(dim, i));
  std::vector<RationalVector> rays;
  std::vector<RationalVector> processed;
  for (const auto& a : constraints) {
    if (a.size() != dim) throw ContractError("constraint dimension mismatch");
    if (a.is_zero()) continue;
    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const RationalVector& l) { return !dot(a, l).is_zero(); });
    if (pivot != lin.end()) {
      RationalVector l0 = *pivot;
      if (dot(a, l0).sign() < 0) l0 = -l0;
      const Rational al0 = dot(a, l0);
      lin.erase(pivot);
      for (auto& l : lin) l = primitive(l - l0 * (dot(a, l) / al0));
      for (auto& r : rays) r = primitive(r - l0 * (dot(a, r) / al0));
      rays.push_back(primitive(l0));
      sort_unique(rays);
    } else {
      std::vector<RationalVector> plus, minus, next;
      for (const auto& r : rays) {
        const int s = dot(a, r).sign();
        if (s > 0) plus.push_back(r);
        if (s < 0) minus.push_back(r);
        if (s >= 0) next.push_back(r);
      }
      const std::size_t target = dim - lin.size();
      for (const auto& p : plus) {
        for (const auto& n : minus) {
          std::vector<RationalVector> common;
          for (const auto& c : processed) {
            if (dot(c, p).is_zero() && dot(c, n).is_zero()) common.push_back(c);
          }
          if (target < 2 || rank_of(common, dim) != target - 2) continue;
          next.push_back(primitive(n * dot(a, p) - p * dot(a, n)));
        }
      }
      rays = std::move(next);
      sort_unique(rays);
    }
    processed.push_back(a);
  }
  return {lin, rays};
}

PolyhedralCone PolyhedralCone::from_rays(std::vector<RationalVector> rays, const RationalMatrix& pairing) {
  check_pairing(pairing);
  PolyhedralCone c;
  c.pairing_ = pairing;
  c.finish_from_rays(canonical(rays, pairing.cols()));
  return c;
}

PolyhedralCone PolyhedralCone::from_rays(std::vector<RationalVector> rays) {
  if (rays.empty()) throw ContractError("cannot infer ambient dimension from no rays");
  const std::size_t d = rays[0].size();
  return from_rays(std::move(rays), RationalMatrix::identity(d));
}

PolyhedralCone PolyhedralCone::from_facets(std::vector<RationalVector> facets, const RationalMatrix& pairing) {
  check_pairing(pairing);
  const std::size_t d = pairing.cols();
  std::vector<RationalVector> normals;
  const RationalMatrix qt = pairing.transpose();
  for (const auto& f : canonical(facets, pairing.rows())) normals.push_back(qt * f);
  auto dd = double_description(d, normals);
  if (!dd.lineality.empty()) throw ContractError("cone contains a line");
  PolyhedralCone c;
  c.pairing_ = pairing;
  c.finish_from_rays(canonical(dd.rays, d));
  return c;
}

PolyhedralCone PolyhedralCone::from_facets(std::vector<RationalVector> facets, std::size_t dim) {
  return from_facets(std::move(facets), RationalMatrix::identity(dim));
}

void PolyhedralCone::finish_from_rays(std::vector<RationalVector> rays) {
  const std::size_t d = ambient_dim();
  std::vector<RationalVector> constraints;
  for (const auto& r : rays) constraints.push_back(pairing_ * r);
  auto dd = double_description(pairing_.rows(), constraints);
  equations_ = canonical(dd.lineality, pairing_.rows());
  facets_ = canonical(dd.rays, pairing_.rows());
  std::vector<RationalVector> all = facets_;
  all.insert(all.end(), equations_.begin(), equations_.end());
  if (rank_of(all, pairing_.rows()) < d) throw ContractError("cone contains a line");
  // keep only extreme rays
  rays_.clear();
  for (const auto& r : rays) {
    std::vector<RationalVector> tight = equations_;
    for (const auto& f : facets_) {
      if (pair(f, r).is_zero()) tight.push_back(f);
    }
    if (rank_of(tight, pairing_.rows()) == d - 1) rays_.push_back(r);
  }
  sort_unique(rays_);
}

Rational PolyhedralCone::pair(const RationalVector& f, const RationalVector& v) const {
  return conepolar::pair(pairing_, f, v);
}

RationalVector PolyhedralCone::normal(const RationalVector& f) const { return pairing_.transpose() * f; }

bool PolyhedralCone::contains(const RationalVector& v) const {
  return membership(*this, v).status != MembershipStatus::outside;
}

bool PolyhedralCone::contains(const PolyhedralCone& other) const {
  if (other.ambient_dim() != ambient_dim()) throw ContractError("cone containment: dimension mismatch");
  return std::all_of(other.rays().begin(), other.rays().end(), [&](const RationalVector& r) { return contains(r); });
}

RationalVector PolyhedralCone::interior_point() const {
  RationalVector s(ambient_dim());
  for (const auto& r : rays_) s += r;
  return s;
}

PolyhedralCone dual_cone(const PolyhedralCone& c) {
  if (!c.full_dimensional()) throw ContractError("dual of a lower-dimensional cone contains a line");
  return PolyhedralCone::from_rays(c.facets(), c.pairing().transpose());
}

Membership membership(const PolyhedralCone& c, const RationalVector& v) {
  if (v.size() != c.ambient_dim()) {
    throw ContractError("membership: vector of dimension " + std::to_string(v.size()) + " in a cone of dimension " +
                        std::to_string(c.ambient_dim()));
  }
  for (const auto& e : c.equations()) {
    if (!c.pair(e, v).is_zero()) return {MembershipStatus::outside, e};
  }
  std::optional<RationalVector> tight;
  for (const auto& f : c.facets()) {
    const int s = c.pair(f, v).sign();
    if (s < 0) return {MembershipStatus::outside, f};
    if (s == 0 && !tight) tight = f;
  }
  if (tight) return {MembershipStatus::boundary, tight};
  if (c.facets().empty() && v.is_zero() && c.dimension() > 0) return {MembershipStatus::boundary, std::nullopt};
  return {MembershipStatus::interior, std::nullopt};
}

std::optional<Rational> exit_parameter(const PolyhedralCone& c, const RationalVector& base,
                                       const RationalVector& dir) {
  if (dir.size() != c.ambient_dim()) throw ContractError("exit_parameter: direction dimension mismatch");
  const auto m = membership(c, base);
  if (m.status == MembershipStatus::outside) {
    throw PreconditionError("exit_parameter: base " + base.str() + " is outside the cone (violates " +
                            m.witness->str() + ")");
  }
  for (const auto& e : c.equations()) {
    if (!c.pair(e, dir).is_zero()) return Rational(0);
  }
  std::optional<Rational> best;
  for (const auto& f : c.facets()) {
    const Rational fd = c.pair(f, dir);
    if (fd.sign() >= 0) continue;
    const Rational t = -c.pair(f, base) / fd;
    if (!best || t < *best) best = t;
  }
  return best;
}

}  // namespace conepolar
