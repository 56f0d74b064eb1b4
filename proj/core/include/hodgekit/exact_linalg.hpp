#pragma once

// Exact arithmetic over Q(i): rational and Gaussian-rational scalars, dense
// matrices, and canonicalized subspaces of Q(i)^n.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hodgekit {

/// Arbitrary precision rational; GMP keeps it in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "a", "a/b" and plain decimals such as "-1.25" or "3e-2".
/// Throws std::invalid_argument on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// a + b·i with a, b rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// re² + im²
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// i^k for any integer k.
GaussianRational i_power(int k);

using QiVector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class QiMatrix {
 public:
  QiMatrix() = default;
  QiMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Throws DimensionMismatch unless entries.size() == rows * cols.
  QiMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);

  static QiMatrix identity(std::size_t n);
  static QiMatrix from_rows(std::initializer_list<std::initializer_list<GaussianRational>> rows);
  static QiMatrix from_rows(const std::vector<QiVector>& rows, std::size_t cols);
  static QiMatrix from_columns(const std::vector<QiVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<GaussianRational>& entries() const noexcept { return entries_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  QiVector row(std::size_t r) const;
  QiVector column(std::size_t c) const;
  /// Columns [first, first + count).
  QiMatrix column_range(std::size_t first, std::size_t count) const;
  QiMatrix row_range(std::size_t first, std::size_t count) const;

  QiMatrix transpose() const;
  /// Entrywise complex conjugate.
  QiMatrix conj() const;
  bool is_zero() const;

  QiMatrix& operator+=(const QiMatrix& o);
  QiMatrix& operator-=(const QiMatrix& o);
  friend QiMatrix operator+(QiMatrix a, const QiMatrix& b) { return a += b; }
  friend QiMatrix operator-(QiMatrix a, const QiMatrix& b) { return a -= b; }
  friend QiMatrix operator*(const QiMatrix& a, const QiMatrix& b);
  friend QiMatrix operator*(const GaussianRational& s, QiMatrix m);
  friend bool operator==(const QiMatrix& a, const QiMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

std::ostream& operator<<(std::ostream& os, const QiMatrix& m);

QiMatrix hstack(const QiMatrix& a, const QiMatrix& b);
QiMatrix vstack(const QiMatrix& a, const QiMatrix& b);
/// Block diagonal [[a, 0], [0, b]].
QiMatrix block_diagonal(const QiMatrix& a, const QiMatrix& b);
/// Kronecker product; entry (i·rb + k, j·cb + l) = a(i,j)·b(k,l).
QiMatrix kronecker(const QiMatrix& a, const QiMatrix& b);

/// Reduced row echelon form. Pivots are the first nonzero entry found
/// scanning each column top to bottom.
QiMatrix rref(const QiMatrix& m);
/// rref plus the pivot column of each nonzero row.
QiMatrix rref(const QiMatrix& m, std::vector<std::size_t>& pivot_columns);
std::size_t rank(const QiMatrix& m);
GaussianRational determinant(const QiMatrix& m);
/// Throws DimensionMismatch for non-square and InvalidStructure for singular input.
QiMatrix inverse(const QiMatrix& m);

/// A linear subspace of Q(i)^n stored by a canonical basis: the columns of
/// `basis()` are the nonzero rows of the rref of any spanning set, so equal
/// subspaces compare equal member-wise.
class Subspace {
 public:
  Subspace() = default;

  /// Column span of `columns` (dependent columns allowed).
  static Subspace span(const QiMatrix& columns);
  static Subspace span(const std::vector<QiVector>& vectors, std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim_; }
  /// ambient_dim × dim, columns linearly independent.
  const QiMatrix& basis() const noexcept { return basis_; }

  bool contains(const QiVector& v) const;
  bool contains(const Subspace& other) const;

  /// Fixed by complex conjugation; such a subspace has a rational canonical basis.
  bool is_real() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(std::size_t ambient_dim, QiMatrix basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  std::size_t ambient_dim_ = 0;
  QiMatrix basis_;
};

std::ostream& operator<<(std::ostream& os, const Subspace& s);

/// Null space of m, as a subspace of Q(i)^{cols}.
Subspace kernel(const QiMatrix& m);
/// Column space of m.
inline Subspace image(const QiMatrix& m) { return Subspace::span(m); }
/// Throws DimensionMismatch when ambient dimensions differ.
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// Entrywise conjugate of the basis.
Subspace conjugate(const Subspace& s);
/// True iff the parts' dimensions add up to the ambient dimension and their
/// concatenated bases have full rank. Throws DimensionMismatch on mixed ambients.
bool direct_sum_spans(std::span<const Subspace> parts);

/// Coordinates of the columns of `vectors` in the canonical basis of `s`.
/// Throws InvalidStructure if some column is not in `s`.
QiMatrix coordinates_in(const Subspace& s, const QiMatrix& vectors);

}  // namespace hodgekit
