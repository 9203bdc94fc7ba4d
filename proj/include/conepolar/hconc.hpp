#pragma once

// Homogeneous concave functions on cones and their polar transform
//
//   Hf(w) = inf { <w, v> / f(v) : v in C, f(v) > 0 },   w in C*.
//
// Piecewise-linear functions are transformed exactly: on each linearity
// chamber the ratio is linear-fractional, so the infimum sits on a chamber
// ray. Everything else is located by a floating-point search and then
// certified by a cutting-plane loop that returns a
// certified rational enclosure [lo, hi]. hi is the ratio at an explicit
// point; lo is the optimum of an exact LP over linear majorants of f.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conepolar/cones.hpp"
#include "conepolar/exactnum.hpp"

namespace conepolar {

class Polynomial {
 public:
  struct Term {
    std::vector<unsigned> exp;
    Rational coef;
  };

  Polynomial() = default;
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Total degree; throws ContractError if the polynomial is not homogeneous.
  unsigned homogeneous_degree() const;

  Rational operator()(const RationalVector& v) const;
  RationalVector gradient(const RationalVector& v) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;  // merged, sorted, no zero coefficients
};

enum class FunctionKind { linear, piecewise_linear, power_polynomial, exit_based, polar_of, callable };

const char* to_string(FunctionKind k);

struct LinearPiece {
  PolyhedralCone chamber;
  RationalVector form;  // standard coordinates: f(v) = form . v
};

struct PolynomialPiece {
  PolyhedralCone chamber;
  Polynomial poly;
};

struct PolarOptions {
  Rational tol = Rational(1, 1000000000);
  bool force_numeric = false;
  unsigned max_iterations = 400;
};

struct PolarValue {
  Interval value;
  /// Point of the domain attaining (or certifying) the upper end.
  std::optional<RationalVector> argmin;
  /// w was outside the dual cone; the value is then reported as 0.
  bool outside_dual = false;
  bool exact() const { return value.is_exact(); }
};

class ConeFunction {
 public:
  ConeFunction() = default;

  static ConeFunction linear(PolyhedralCone domain, RationalVector form);
  /// Explicit linearity chambers; they must cover the domain and agree on
  /// overlaps.
  static ConeFunction piecewise_linear(PolyhedralCone domain, std::vector<LinearPiece> chambers);
  /// v -> min_i forms[i] . v, with its linearity chambers computed exactly.
  static ConeFunction min_of_linear(PolyhedralCone domain, std::vector<RationalVector> forms);
  /// v -> p(v)^(1/root) with p of degree `root` on each chamber.
  static ConeFunction power_polynomial(PolyhedralCone domain, std::vector<PolynomialPiece> chambers, unsigned root);
  /// v -> sup{t >= 0 : base_map v + t dir in target}.
  static ConeFunction exit_based(PolyhedralCone domain, PolyhedralCone target, RationalMatrix base_map,
                                 RationalVector dir);
  /// The polar transform of `inner`, defined on the dual cone of its domain.
  static ConeFunction polar_of(const ConeFunction& inner, PolarOptions options = {});
  static ConeFunction callable(PolyhedralCone domain, std::function<Rational(const RationalVector&)> fn,
                               std::string name = "callable");

  FunctionKind kind() const;
  const PolyhedralCone& domain() const;
  /// Values are exact rationals (everything except powers and polars of them).
  bool is_exact() const;
  /// Piecewise-linear and known to be a minimum of its chamber forms.
  bool is_piecewise_linear() const;
  std::string describe() const;

  /// Throws PreconditionError when v is outside the domain.
  Interval evaluate(const RationalVector& v) const;
  /// Throws UnsupportedError when the value is not an exact rational.
  Rational evaluate_exact(const RationalVector& v) const;
  /// Floating-point value used to steer searches; nullopt for kinds without
  /// a cheap approximation (polars of non piecewise-linear functions).
  std::optional<double> approx(const std::vector<double>& v) const;

  /// Linearity chambers (piecewise-linear kinds only, else empty).
  const std::vector<LinearPiece>& linear_chambers() const;
  /// Rays of all linearity chambers and of the domain.
  std::vector<RationalVector> breakpoint_rays() const;
  /// Linear forms s with s . x >= f(x) on the domain and s . v close to f(v).
  std::vector<RationalVector> majorants(const RationalVector& v) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

PolarValue polar_eval(const ConeFunction& f, const RationalVector& w, const PolarOptions& options = {});

/// Random point of the cone: a positive integer combination of a random
/// nonempty subset of the rays (all rays with probability 1 - boundary_fraction).
RationalVector random_point(const PolyhedralCone& c, std::mt19937_64& rng, double boundary_fraction = 0.25);

struct PropertyReport {
  std::string property;
  std::size_t samples = 0;
  std::vector<std::string> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

/// Homogeneity and superadditivity on sampled points. Exact kinds are
/// compared exactly; interval kinds pass when the enclosures agree up to tol.
std::vector<PropertyReport> check_hconc(const ConeFunction& f, std::size_t samples, std::uint64_t seed,
                                        const Rational& tol = Rational(1, 1000000000));

/// H f == g on sampled points of g's domain and H g == f on sampled points
/// of f's domain, up to tol.
std::vector<PropertyReport> check_duality_transform(const ConeFunction& f, const ConeFunction& g,
                                                    std::size_t samples, std::uint64_t seed,
                                                    const Rational& tol = Rational(1, 1000000000));

/// For f1 <= f2 (verified on the samples), H f1 >= H f2 on sampled dual points.
PropertyReport check_order_reversal(const ConeFunction& f1, const ConeFunction& f2, std::size_t samples,
                                    std::uint64_t seed, const Rational& tol = Rational(1, 1000000000));

}  // namespace conepolar
