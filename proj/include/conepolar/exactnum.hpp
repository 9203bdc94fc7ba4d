#pragma once

// Exact rational scalars, vectors and matrices. Everything here is backed by
// GMP; nothing rounds.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "conepolar/errors.hpp"

namespace conepolar {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Parses "p", "p/q" or "-p/q". Throws ContractError on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational pow(unsigned k) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Closest rational with denominator 2^bits (round half away from zero).
Rational round_to_dyadic(const Rational& x, unsigned bits);
Rational from_double(double x);

class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static RationalVector unit(std::size_t dim, std::size_t i);
  /// Parses "a, b, c" (comma separated rationals).
  static RationalVector parse(std::string_view text);

  std::size_t size() const { return coords_.size(); }
  std::size_t dim() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }

  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  std::string str() const;
  std::vector<double> to_doubles() const;

  /// Vector with `x` appended.
  RationalVector extended(const Rational& x) const;
  RationalVector head(std::size_t n) const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);
  RationalVector& operator/=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(RationalVector a, const Rational& s) { return a *= s; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator/(RationalVector a, const Rational& s) { return a /= s; }
  RationalVector operator-() const;

  friend bool operator==(const RationalVector& a, const RationalVector& b) = default;
  friend auto operator<=>(const RationalVector& a, const RationalVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

/// Standard dot product; throws ContractError on a size mismatch.
Rational dot(const RationalVector& a, const RationalVector& b);

/// Positive multiple of `v` with coprime integer entries. Zero stays zero.
RationalVector primitive(const RationalVector& v);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  /// Block diagonal [[a, 0], [0, corner]].
  static RationalMatrix extend_diagonal(const RationalMatrix& a, const Rational& corner);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector col(std::size_t c) const;
  RationalMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  std::size_t rank() const;
  Rational determinant() const;

  friend RationalVector operator*(const RationalMatrix& m, const RationalVector& v);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Exact solution of A x = b, or nullopt when inconsistent. Columns are
/// pivoted left to right; free variables of an underdetermined system are 0.
std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b);

/// a^T P b.
Rational pair(const RationalMatrix& p, const RationalVector& a, const RationalVector& b);

/// Rank of the span of `vectors` (all of one dimension).
std::size_t rank_of(const std::vector<RationalVector>& vectors, std::size_t dim);

/// Basis of {x : v . x = 0 for all v in rows}.
std::vector<RationalVector> kernel(const std::vector<RationalVector>& rows, std::size_t dim);

/// A closed rational interval [lo, hi]. Exact values have lo == hi.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  std::string str() const;

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  /// Scaling by a nonnegative rational.
  Interval scaled(const Rational& s) const;
};

/// Bounds on x^(1/n) for x >= 0, exact when x is a perfect n-th power and
/// otherwise of width at most 2^-bits.
Interval nth_root(const Rational& x, unsigned n, unsigned bits = 160);

/// Bounds on x^(p/q) for an interval of nonnegative x.
Interval rational_power(const Interval& x, unsigned p, unsigned q, unsigned bits = 160);

}  // namespace conepolar
