#pragma once

// Intersection-theoretic models of varieties with marked-point profiles.
//
// Coordinates: divisor classes and curve classes live in Q^rho with the
// pairing D . C = D^T P C. A point blow-up Y -> X appends one coordinate to
// each side: E (last divisor coordinate) and the line class l_E in E
// (last curve coordinate), with E . l_E = -1.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "conepolar/cones.hpp"
#include "conepolar/exactnum.hpp"
#include "conepolar/hconc.hpp"

namespace conepolar {

struct LabeledClass {
  std::string label;
  RationalVector cls;
};

struct NegativeCurve {
  std::string label;
  RationalVector cls;
  Rational self_int;
};

struct Incidence {
  std::string label;
  RationalVector cls;
  Rational mult;
};

struct BlowupModel {
  RationalMatrix pairing;
  PolyhedralCone nef;
  PolyhedralCone eff_div;
  PolyhedralCone eff_curves;
  PolyhedralCone mov_curves;
};

struct PointProfile {
  std::string name;
  /// Labels of the model curves/divisors that contain the point.
  std::vector<std::string> lies_on;
  std::string provenance;
  BlowupModel blowup;
  std::vector<Incidence> curves_through_x;
  std::vector<Incidence> divisors_through_x;
};

struct VanishingCase {
  RationalVector alpha;
  std::vector<std::string> enk_divisorial;
  std::string note;
};

struct GoldenValue {
  std::string op;
  std::string profile;  // "generic" when the file omits it
  RationalVector cls;
  Rational expected;
  std::string note;
};

struct VarietyModel {
  std::string name;
  unsigned dim = 0;
  std::size_t rho = 0;
  std::vector<std::string> divisor_basis;
  std::vector<std::string> curve_basis;
  RationalMatrix pairing;
  Polynomial top_intersection;
  PolyhedralCone nef;
  PolyhedralCone eff_div;
  PolyhedralCone eff_curves;
  PolyhedralCone mov_curves;
  std::vector<LabeledClass> prime_divisors;
  std::vector<NegativeCurve> negative_curves;
  std::vector<PolynomialPiece> volume_chambers;
  /// vol^(1/dim) on eff_div.
  ConeFunction volume_root;
  std::vector<PointProfile> profiles;
  std::vector<VanishingCase> vanishing_cases;
  std::vector<GoldenValue> golden;
  std::string provenance;

  /// Throws ContractError naming the unknown profile.
  const PointProfile& profile(std::string_view name) const;
  bool is_surface() const { return dim == 2; }
};

/// Parses and validates a model. Every failure is a ModelError whose message
/// starts with the JSON location of the offending data.
VarietyModel load_model(std::string_view json_text);
VarietyModel load_model_file(const std::filesystem::path& path);

RationalVector pullback_div(const BlowupModel& b, const RationalVector& l);
RationalVector pullback_curve(const BlowupModel& b, const RationalVector& alpha);
/// E as a divisor class on Y.
RationalVector exceptional_divisor(const BlowupModel& b);
/// e = (-E)^(n-1) = -l_E in every dimension, since E^(n-1) = (-1)^(n-2) l_E.
RationalVector exceptional_curve_class(const BlowupModel& b);

struct ZariskiDecomposition {
  struct Part {
    std::string label;
    RationalVector cls;
    Rational coef;
  };
  RationalVector positive;
  std::vector<Part> negative_support;  // sorted by label, coefficients > 0

  RationalVector negative() const;
};

/// Surfaces only. Throws UnsupportedError for dim != 2, PreconditionError
/// when L is not pseudo-effective and ModelError when the negative-curve
/// catalog is evidently incomplete.
ZariskiDecomposition zariski_decompose(const VarietyModel& m, const RationalVector& l);

/// vol(L) for pseudo-effective L: P(L)^2 on surfaces, the model chamber
/// polynomial otherwise.
Rational volume(const VarietyModel& m, const RationalVector& l);

/// The curve class L^(n-1), from the top self-intersection polynomial:
/// D . L^(n-1) = (1/n) dT/dD (L).
RationalVector curve_power(const VarietyModel& m, const RationalVector& l);

}  // namespace conepolar
