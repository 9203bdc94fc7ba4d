#include "conepolar/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace conepolar {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ContractError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(s, num)
                      : parse_integer(trim(s.substr(0, slash)), num) &&
                            parse_integer(trim(s.substr(slash + 1)), den);
  if (!ok) throw ContractError("malformed rational '" + std::string(text) + "'");
  if (den == 0) throw ContractError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::pow(unsigned k) const {
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), k);
  return Rational(n, d);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational round_to_dyadic(const Rational& x, unsigned bits) {
  mpz_class scale = 1;
  scale <<= bits;
  mpq_class scaled = x.raw() * scale;
  mpz_class twice = 2 * scaled.get_num();
  mpz_class den = scaled.get_den();
  // round(n/d) = floor((2n + d) / 2d) for the positive case
  mpz_class q;
  if (twice >= 0) {
    mpz_class t = twice + den;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  } else {
    mpz_class t = -twice + den;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    q = -q;
  }
  return Rational(q, scale);
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw ContractError("non-finite double");
  return Rational(mpq_class(x));
}

RationalVector RationalVector::unit(std::size_t dim, std::size_t i) {
  RationalVector v(dim);
  v[i] = 1;
  return v;
}

RationalVector RationalVector::parse(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  std::string_view s = trim(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
  if (trim(s).empty()) throw ContractError("empty class vector");
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(Rational::parse(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RationalVector(std::move(out));
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::string RationalVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].str();
  }
  return out + ")";
}

std::vector<double> RationalVector::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.to_double());
  return out;
}

RationalVector RationalVector::extended(const Rational& x) const {
  RationalVector out = *this;
  out.coords_.push_back(x);
  return out;
}

RationalVector RationalVector::head(std::size_t n) const {
  if (n > size()) throw ContractError("head longer than vector");
  return RationalVector(std::vector<Rational>(coords_.begin(), coords_.begin() + static_cast<long>(n)));
}

static void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ContractError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                        std::to_string(b) + ")");
  }
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  require_same(size(), o.size(), "vector sum");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}
RationalVector& RationalVector::operator-=(const RationalVector& o) {
  require_same(size(), o.size(), "vector difference");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}
RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}
RationalVector& RationalVector::operator/=(const Rational& s) {
  for (auto& c : coords_) c /= s;
  return *this;
}
RationalVector RationalVector::operator-() const {
  RationalVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << v.str(); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same(a.size(), b.size(), "dot");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

RationalVector primitive(const RationalVector& v) {
  mpz_class lcm = 1;
  for (const auto& c : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_class n = c.numerator() * (lcm / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  if (g == 0) return v;
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g, 1);
  return out;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same(rows[r].size(), m.cols_, "matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::extend_diagonal(const RationalMatrix& a, const Rational& corner) {
  RationalMatrix m(a.rows_ + 1, a.cols_ + 1);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  m(a.rows_, a.cols_) = corner;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(std::vector<Rational>(data_.begin() + static_cast<long>(r * cols_),
                                              data_.begin() + static_cast<long>((r + 1) * cols_)));
}

RationalVector RationalMatrix::col(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<std::vector<mpq_class>>& m, std::size_t cols, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (swaps) ++*swaps;
    }
    for (std::size_t k = r + 1; k < m.size(); ++k) {
      if (m[k][c] == 0) continue;
      mpq_class f = m[k][c] / m[r][c];
      for (std::size_t j = c; j < m[k].size(); ++j) m[k][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> to_rows(const RationalMatrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c).raw();
  return m;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  auto m = to_rows(*this);
  return echelon(m, cols_).size();
}

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw ContractError("determinant of a non-square matrix");
  auto m = to_rows(*this);
  int swaps = 0;
  const auto piv = echelon(m, cols_, &swaps);
  if (piv.size() < rows_) return 0;
  mpq_class d = swaps % 2 ? -1 : 1;
  for (std::size_t i = 0; i < rows_; ++i) d *= m[i][i];
  return Rational(d);
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
  require_same(m.cols(), v.size(), "matrix-vector product");
  RationalVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c).raw() * v[c].raw();
    out[r] = Rational(acc);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require_same(a.cols(), b.rows(), "matrix product");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(r, k).raw() * b(k, c).raw();
      out(r, c) = Rational(acc);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? ", " : "") << m.row(r);
  return os << "]";
}

std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b) {
  require_same(a.rows(), b.size(), "solve_linear");
  const std::size_t n = a.cols();
  auto m = to_rows(a);
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r].raw());
  const auto pivots = echelon(m, n);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (m[r][n] != 0) return std::nullopt;
  }
  std::vector<mpq_class> x(n, 0);
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t c = pivots[i];
    mpq_class acc = m[i][n];
    for (std::size_t j = c + 1; j < n; ++j) acc -= m[i][j] * x[j];
    x[c] = acc / m[i][c];
  }
  RationalVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Rational(x[i]);
  return out;
}

Rational pair(const RationalMatrix& p, const RationalVector& a, const RationalVector& b) {
  require_same(p.rows(), a.size(), "pair (left)");
  require_same(p.cols(), b.size(), "pair (right)");
  return dot(a, p * b);
}

std::size_t rank_of(const std::vector<RationalVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  for (const auto& v : vectors) require_same(v.size(), dim, "rank_of");
  return RationalMatrix::from_rows(vectors).rank();
}

std::vector<RationalVector> kernel(const std::vector<RationalVector>& rows, std::size_t dim) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& v : rows) {
    require_same(v.size(), dim, "kernel");
    std::vector<mpq_class> row;
    for (const auto& c : v) row.push_back(c.raw());
    m.push_back(std::move(row));
  }
  const auto pivots = echelon(m, dim);
  // reduce to RREF
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t c = pivots[i];
    const mpq_class lead = m[i][c];
    for (auto& x : m[i]) x /= lead;
    for (std::size_t k = 0; k < i; ++k) {
      if (m[k][c] == 0) continue;
      const mpq_class f = m[k][c];
      for (std::size_t j = 0; j < dim; ++j) m[k][j] -= f * m[i][j];
    }
  }
  std::vector<RationalVector> basis;
  for (std::size_t freec = 0; freec < dim; ++freec) {
    if (std::find(pivots.begin(), pivots.end(), freec) != pivots.end()) continue;
    RationalVector v(dim);
    v[freec] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = Rational(mpq_class(-m[i][freec]));
    basis.push_back(primitive(v));
  }
  return basis;
}

std::string Interval::str() const {
  if (is_exact()) return lo.str();
  std::ostringstream os;
  os << "[" << lo.str() << ", " << hi.str() << "]";
  return os.str();
}

Interval Interval::scaled(const Rational& s) const {
  if (s.sign() < 0) throw ContractError("interval scaled by a negative factor");
  return {lo * s, hi * s};
}

Interval nth_root(const Rational& x, unsigned n, unsigned bits) {
  if (x.sign() < 0) throw PreconditionError("root of a negative rational");
  if (n == 0) throw ContractError("zeroth root");
  if (x.is_zero() || n == 1) return Interval::point(x);
  // exact case: numerator and denominator are perfect powers
  mpz_class rn;
  mpz_class rd;
  const bool en = mpz_root(rn.get_mpz_t(), x.raw().get_num_mpz_t(), n) != 0;
  const bool ed = mpz_root(rd.get_mpz_t(), x.raw().get_den_mpz_t(), n) != 0;
  if (en && ed) return Interval::point(Rational(rn, rd));
  // x^(1/n) = (p q^(n-1) K^n)^(1/n) / (q K), K = 2^bits
  mpz_class q = x.denominator();
  mpz_class qpow;
  mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), n - 1);
  mpz_class k = 1;
  k <<= bits;
  mpz_class kpow;
  mpz_pow_ui(kpow.get_mpz_t(), k.get_mpz_t(), n);
  mpz_class radicand = x.numerator() * qpow * kpow;
  mpz_class r;
  const bool exact = mpz_root(r.get_mpz_t(), radicand.get_mpz_t(), n) != 0;
  const mpz_class den = q * k;
  if (exact) return Interval::point(Rational(r, den));
  return {Rational(r, den), Rational(r + 1, den)};
}

Interval rational_power(const Interval& x, unsigned p, unsigned q, unsigned bits) {
  if (x.lo.sign() < 0) throw PreconditionError("fractional power of a negative interval");
  const Interval lo = nth_root(x.lo.pow(p), q, bits);
  const Interval hi = x.is_exact() ? lo : nth_root(x.hi.pow(p), q, bits);
  return {lo.lo, hi.hi};
}

}  // namespace conepolar
