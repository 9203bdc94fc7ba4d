#pragma once

// Rational polyhedral cones with both representations kept in sync.
//
// A cone lives in a space V. Its facet normals live in the dual space V',
// and the two are paired through an explicit matrix Q: <f, v> = f^T Q v.
// For a cone of divisor classes Q is the transpose of the divisor-curve
// intersection matrix; for a cone of curve classes it is that matrix itself.
// Dualizing swaps rays and facets and transposes Q.

#include <optional>
#include <vector>

#include "conepolar/exactnum.hpp"

namespace conepolar {

/// Output of the double description method on {x : a . x >= 0}.
struct DoubleDescription {
  std::vector<RationalVector> lineality;
  std::vector<RationalVector> rays;
};

/// Motzkin-style double description with exact arithmetic.
DoubleDescription double_description(std::size_t dim, const std::vector<RationalVector>& constraints);

class PolyhedralCone {
 public:
  PolyhedralCone() = default;

  static PolyhedralCone from_rays(std::vector<RationalVector> rays, const RationalMatrix& pairing);
  static PolyhedralCone from_facets(std::vector<RationalVector> facets, const RationalMatrix& pairing);
  /// Identity pairing.
  static PolyhedralCone from_rays(std::vector<RationalVector> rays);
  static PolyhedralCone from_facets(std::vector<RationalVector> facets, std::size_t dim);

  std::size_t ambient_dim() const { return pairing_.cols(); }
  std::size_t dimension() const { return ambient_dim() - equations_.size(); }
  bool full_dimensional() const { return equations_.empty(); }

  /// Extreme rays: primitive integer vectors, sorted.
  const std::vector<RationalVector>& rays() const { return rays_; }
  /// Facet normals in the dual space, sorted.
  const std::vector<RationalVector>& facets() const { return facets_; }
  /// Dual vectors vanishing on the whole cone (empty when full-dimensional).
  const std::vector<RationalVector>& equations() const { return equations_; }
  const RationalMatrix& pairing() const { return pairing_; }

  /// f^T Q v.
  Rational pair(const RationalVector& f, const RationalVector& v) const;
  /// Coefficients of the linear form v -> <f, v> in standard coordinates.
  RationalVector normal(const RationalVector& f) const;

  bool contains(const RationalVector& v) const;
  bool contains(const PolyhedralCone& other) const;

  /// Strictly positive combination of the rays (relative interior point).
  RationalVector interior_point() const;

  friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b) {
    return a.pairing_ == b.pairing_ && a.rays_ == b.rays_;
  }

 private:
  void finish_from_rays(std::vector<RationalVector> rays);

  RationalMatrix pairing_;
  std::vector<RationalVector> rays_;
  std::vector<RationalVector> facets_;
  std::vector<RationalVector> equations_;
};

/// Dual cone in the dual space, paired through Q^T.
PolyhedralCone dual_cone(const PolyhedralCone& c);

enum class MembershipStatus { interior, boundary, outside };

struct Membership {
  MembershipStatus status = MembershipStatus::outside;
  /// For boundary: a facet vanishing at v. For outside: a violated facet
  /// (or equation).
  std::optional<RationalVector> witness;
};

Membership membership(const PolyhedralCone& c, const RationalVector& v);

/// sup{t >= 0 : base + t * dir in C}; nullopt means +infinity.
/// Throws PreconditionError when base is not in C.
std::optional<Rational> exit_parameter(const PolyhedralCone& c, const RationalVector& base,
                                       const RationalVector& dir);

}  // namespace conepolar
