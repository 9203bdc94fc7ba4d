#pragma once

// Local positivity invariants of a point profile and the theorem-level checks.
//
// Divisor side:  s_x(L) = exit(Nef(Y),   pi*L, -E)
//                n_x(L) = exit(Eff^1(Y), pi*L, -E)
// Curve side:    N_x(a) = H s_x (a) = exit(Eff_1(Y), pi*a, e)
//                S_x(a) = H n_x (a) = exit(Mov_1(Y), pi*a, e)
// The curve-side invariants have two or three independent routes; the checks
// compare them.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conepolar/geomodel.hpp"
#include "conepolar/hconc.hpp"

namespace conepolar {

enum class Route { exit, polar, divisors };

const char* to_string(Route r);
std::optional<Route> parse_route(std::string_view s);

/// Invariants of one (model, profile) pair with the cone functions built once.
class LocalInvariants {
 public:
  LocalInvariants(const VarietyModel& model, const std::string& profile, PolarOptions options = {});

  const VarietyModel& model() const { return *model_; }
  const PointProfile& profile() const { return *profile_; }
  const PolarOptions& options() const { return options_; }

  /// s_x and n_x as cone functions on Nef^1 and Eff^1.
  const ConeFunction& s_function() const { return s_fn_; }
  const ConeFunction& n_function() const { return n_fn_; }
  /// N_x and S_x as polar transforms on Eff_1 and Mov_1.
  const ConeFunction& N_function() const { return N_fn_; }
  const ConeFunction& S_function() const { return S_fn_; }

  Rational s(const RationalVector& l) const;
  Rational s_via_curves(const RationalVector& l) const;
  Rational n(const RationalVector& l) const;
  PolarValue N(const RationalVector& alpha, Route route) const;
  PolarValue S(const RationalVector& alpha, Route route) const;

 private:
  const VarietyModel* model_;
  const PointProfile* profile_;
  PolarOptions options_;
  ConeFunction s_fn_, n_fn_, N_fn_, S_fn_;
};

Rational seshadri_s(const VarietyModel& m, const std::string& profile, const RationalVector& l);
Rational seshadri_s_via_curves(const VarietyModel& m, const std::string& profile, const RationalVector& l);
Rational nakayama_n(const VarietyModel& m, const std::string& profile, const RationalVector& l);
PolarValue nakayama_N(const VarietyModel& m, const std::string& profile, const RationalVector& alpha,
                      Route route = Route::exit, const PolarOptions& options = {});
PolarValue seshadri_S(const VarietyModel& m, const std::string& profile, const RationalVector& alpha,
                      Route route = Route::exit, const PolarOptions& options = {});

/// S(a) = min over the model's profiles of S_x(a), exit route.
Rational global_S(const VarietyModel& m, const RationalVector& alpha);

/// vol^(1/n) restricted to Nef^1 (where vol = L^n).
ConeFunction nef_volume_root(const VarietyModel& m);

/// H(vol^(1/n)) over Nef^1 and over Eff^1: the (n-1)/n powers of vol-hat and M.
PolarValue vol_hat_root(const VarietyModel& m, const RationalVector& alpha, const PolarOptions& options = {});
PolarValue M_root(const VarietyModel& m, const RationalVector& alpha, const PolarOptions& options = {});
/// vol-hat(a) and M(a) themselves, i.e. the roots above raised to n/(n-1).
Interval vol_hat(const VarietyModel& m, const RationalVector& alpha, const PolarOptions& options = {});
Interval M_func(const VarietyModel& m, const RationalVector& alpha, const PolarOptions& options = {});

// ---------------------------------------------------------------- checks

enum class CheckStatus { pass, fail, skip };
const char* to_string(CheckStatus s);

struct CheckReport {
  std::string model;
  std::string profile;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::size_t samples = 0;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::string>> values;

  void fail(std::string witness);
  void value(std::string key, std::string v) { values.emplace_back(std::move(key), std::move(v)); }
  bool ok() const { return status != CheckStatus::fail; }
};

std::string report_json(const std::vector<CheckReport>& reports);
std::string report_table(const std::vector<CheckReport>& reports);

struct CheckOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  Rational tol = Rational(1, 1000000000);
};

struct VanishingLocusResult {
  RationalVector alpha;
  bool is_boundary_mov = false;
  bool M_positive = false;
  std::vector<std::string> zero_profiles;
  /// Divisorial part of the non-Kahler locus from the Zariski decomposition
  /// of alpha read as a divisor: null negative curves and the support of N.
  std::vector<std::string> divisorial_enk;
  /// The same set as recorded in the catalog.
  std::vector<std::string> catalog_enk;
  /// Profiles lying on a divisorial component.
  std::vector<std::string> expected_zero_profiles;
  bool holds() const;
};

VanishingLocusResult vanishing_locus(const VarietyModel& m, const RationalVector& alpha,
                                     const std::vector<std::string>& catalog_enk = {});

CheckReport check_theorem_A(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
CheckReport check_theorem_B(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
CheckReport check_S_le_N(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
/// Model-level: runs every vanishing case of the catalog; skip for non-surfaces.
CheckReport check_theorem_C(const VarietyModel& m, const CheckOptions& o);
CheckReport check_fulger_bound(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
CheckReport check_n_upper_bound(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
CheckReport check_n_lower_bound(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
CheckReport check_zariski_additivity(const VarietyModel& m, const std::string& profile, const CheckOptions& o);

/// Exit and polar routes for N_x and S_x on `samples` classes each, plus the
/// divisor route for S_x where the profile lists divisors through x.
CheckReport check_route_agreement(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
/// H s_x == n_x and H n_x == s_x (surfaces only).
CheckReport check_self_duality(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
/// Homogeneity and superadditivity of s_x, n_x, N_x, S_x and vol^(1/n).
CheckReport check_hconc_invariants(const VarietyModel& m, const std::string& profile, const CheckOptions& o);
/// s_x <= n_x on Nef^1, s_x <= the curve-catalog bound, and monotonicity of
/// N_x and S_x under the cone order.
CheckReport check_basic_inequalities(const VarietyModel& m, const std::string& profile, const CheckOptions& o);

/// The eight theorem checks for every profile of the model, in canonical
/// order (profile, check). Theorem C appears once under profile "*".
std::vector<CheckReport> run_suite(const VarietyModel& m, const CheckOptions& o);

/// Names of the eight theorem checks, in suite order.
const std::vector<std::string>& suite_check_names();

}  // namespace conepolar
