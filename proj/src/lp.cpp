#include "conepolar/lp.hpp"

namespace conepolar::lp {

namespace {

using Row = std::vector<mpq_class>;

struct Tableau {
  std::vector<Row> rows;  // last entry is the right-hand side
  std::vector<std::size_t> basis;
  std::size_t cols = 0;   // number of variable columns

  void pivot(std::size_t r, std::size_t c) {
    const mpq_class p = rows[r][c];
    for (auto& x : rows[r]) x /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    basis[r] = c;
  }

  // reduced costs z_j - c_j for maximizing c over the columns in `allowed`
  Row reduced(const Row& c) const {
    Row z(cols + 1, 0);
    for (std::size_t j = 0; j <= cols; ++j) {
      mpq_class acc = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (c[basis[i]] != 0 && rows[i][j] != 0) acc += c[basis[i]] * rows[i][j];
      }
      z[j] = j < cols ? acc - c[j] : acc;
    }
    return z;
  }

  // returns false when unbounded
  bool optimize(const Row& c, std::size_t allowed_cols) {
    while (true) {
      const Row z = reduced(c);
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (z[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed_cols) return true;
      std::size_t leave = rows.size();
      mpq_class best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        mpq_class ratio = rows[i][cols] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

// Shared two-phase driver. `flipped[i]` records rows negated to make b >= 0.
Result solve(const RationalMatrix& a, const RationalVector& b, const RationalVector& c,
             std::vector<bool>* flipped_out, std::vector<std::size_t>* final_basis,
             std::vector<Row>* final_rows) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw ContractError("lp: dimension mismatch");
  Tableau t;
  t.cols = n + m;
  std::vector<bool> flipped(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    Row row(t.cols + 1, 0);
    flipped[i] = b[i].sign() < 0;
    const int s = flipped[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) row[j] = s * a(i, j).raw();
    row[n + i] = 1;
    row[t.cols] = s * b[i].raw();
    t.rows.push_back(std::move(row));
    t.basis.push_back(n + i);
  }
  Row phase1(t.cols, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.optimize(phase1, t.cols);
  Result res;
  {
    mpq_class infeas = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] >= n) infeas += t.rows[i][t.cols];
    }
    if (infeas != 0) {
      res.status = Status::infeasible;
      return res;
    }
  }
  // drive artificials out of the basis; drop redundant rows
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t c2 = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        c2 = j;
        break;
      }
    }
    if (c2 == n) {
      t.rows.erase(t.rows.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
      continue;
    }
    t.pivot(i, c2);
    ++i;
  }
  Row obj(t.cols, 0);
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j].raw();
  if (!t.optimize(obj, n)) {
    res.status = Status::unbounded;
    return res;
  }
  res.status = Status::optimal;
  res.x = RationalVector(n);
  mpq_class value = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    res.x[t.basis[i]] = Rational(t.rows[i][t.cols]);
    value += obj[t.basis[i]] * t.rows[i][t.cols];
  }
  res.value = Rational(value);
  if (flipped_out) *flipped_out = flipped;
  if (final_basis) *final_basis = t.basis;
  if (final_rows) *final_rows = t.rows;
  return res;
}

}  // namespace

Result maximize_eq(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  return solve(a, b, c, nullptr, nullptr, nullptr);
}

Result maximize_leq(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw ContractError("lp: dimension mismatch");
  RationalMatrix ext(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) ext(i, j) = a(i, j);
    ext(i, n + i) = 1;
  }
  RationalVector cext(n + m);
  for (std::size_t j = 0; j < n; ++j) cext[j] = c[j];
  std::vector<bool> flipped;
  std::vector<std::size_t> basis;
  std::vector<Row> rows;
  Result r = solve(ext, b, cext, &flipped, &basis, &rows);
  if (r.status != Status::optimal) return r;
  r.x = r.x.head(n);
  // y = c_B B^{-1}; the slack column of row i is +-e_i in the original
  // system, and the artificial column n+m+i carries B^{-1} e_i (up to the flip).
  const std::size_t art = n + m;
  r.duals = RationalVector(m);
  for (std::size_t i = 0; i < m; ++i) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      acc += cext[basis[k]].raw() * rows[k][art + i];
    }
    r.duals[i] = Rational(flipped[i] ? mpq_class(-acc) : acc);
  }
  return r;
}

bool in_conic_hull(const std::vector<RationalVector>& generators, const RationalVector& v) {
  const std::size_t d = v.size();
  if (generators.empty()) return v.is_zero();
  RationalMatrix a(d, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != d) throw ContractError("in_conic_hull: dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) a(i, j) = generators[j][i];
  }
  return maximize_eq(a, v, RationalVector(generators.size())).status == Status::optimal;
}

}  // namespace conepolar::lp
