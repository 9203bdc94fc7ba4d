#pragma once

#include <vector>

#include "conepolar/exactnum.hpp"

namespace conepolar::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rational value;
  RationalVector x;
  /// Dual multipliers of the constraint rows (only for maximize_leq).
  RationalVector duals;
};

/// maximize c.x subject to A x = b, x >= 0. Two-phase simplex with
/// Bland's rule over exact rationals.
Result maximize_eq(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

/// maximize c.x subject to A x <= b, x >= 0. The duals y >= 0 solve
/// min b.y subject to A^T y >= c.
Result maximize_leq(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

/// Is v a nonnegative combination of the generators?
bool in_conic_hull(const std::vector<RationalVector>& generators, const RationalVector& v);

}  // namespace conepolar::lp
