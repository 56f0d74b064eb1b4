#include "hodgekit/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

#include "hodgekit/errors.hpp"

namespace hodgekit {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  std::string_view rest = s;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(rest.substr(e + 1)).get_si();
    rest = rest.substr(0, e);
  }
  std::string digits;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = rest.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(rest)) throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    digits = std::string(rest);
  }
  Rational value(mpz_class(digits, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= scale;
  } else {
    value *= scale;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  if (x.is_real()) return os << x.re().get_str();
  if (sgn(x.re()) == 0) return os << x.im().get_str() << "i";
  os << x.re().get_str();
  if (sgn(x.im()) > 0) os << "+";
  return os << x.im().get_str() << "i";
}

GaussianRational i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return GaussianRational::i();
    case 2: return -1;
    default: return -GaussianRational::i();
  }
}

QiMatrix::QiMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DimensionMismatch("matrix entry count does not match shape");
}

QiMatrix QiMatrix::identity(std::size_t n) {
  QiMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

QiMatrix QiMatrix::from_rows(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<GaussianRational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return QiMatrix(r, c, std::move(entries));
}

QiMatrix QiMatrix::from_rows(const std::vector<QiVector>& rows, std::size_t cols) {
  std::vector<GaussianRational> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return QiMatrix(rows.size(), cols, std::move(entries));
}

QiMatrix QiMatrix::from_columns(const std::vector<QiVector>& columns, std::size_t rows) {
  return from_rows(columns, rows).transpose();
}

QiVector QiMatrix::row(std::size_t r) const {
  return QiVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QiVector QiMatrix::column(std::size_t c) const {
  QiVector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

QiMatrix QiMatrix::column_range(std::size_t first, std::size_t count) const {
  QiMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

QiMatrix QiMatrix::row_range(std::size_t first, std::size_t count) const {
  QiMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  return out;
}

QiMatrix QiMatrix::transpose() const {
  QiMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QiMatrix QiMatrix::conj() const {
  QiMatrix out = *this;
  for (auto& x : out.entries_) x = x.conj();
  return out;
}

bool QiMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& x) { return x.is_zero(); });
}

QiMatrix& QiMatrix::operator+=(const QiMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

QiMatrix& QiMatrix::operator-=(const QiMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

QiMatrix operator*(const QiMatrix& a, const QiMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  QiMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

QiMatrix operator*(const GaussianRational& s, QiMatrix m) {
  for (auto& x : m.entries_) x *= s;
  return m;
}

std::ostream& operator<<(std::ostream& os, const QiMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  return os << "]";
}

QiMatrix hstack(const QiMatrix& a, const QiMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  QiMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

QiMatrix vstack(const QiMatrix& a, const QiMatrix& b) { return hstack(a.transpose(), b.transpose()).transpose(); }

QiMatrix block_diagonal(const QiMatrix& a, const QiMatrix& b) {
  QiMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

QiMatrix kronecker(const QiMatrix& a, const QiMatrix& b) {
  QiMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

QiMatrix rref(const QiMatrix& m, std::vector<std::size_t>& pivot_columns) {
  QiMatrix a = m;
  pivot_columns.clear();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead, c));
    GaussianRational inv = GaussianRational(1) / a(lead, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      GaussianRational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(lead, c).is_zero()) a(r, c) -= factor * a(lead, c);
      }
    }
    pivot_columns.push_back(col);
    ++lead;
  }
  return a;
}

QiMatrix rref(const QiMatrix& m) {
  std::vector<std::size_t> pivots;
  return rref(m, pivots);
}

std::size_t rank(const QiMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, pivots);
  return pivots.size();
}

GaussianRational determinant(const QiMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  QiMatrix a = m;
  GaussianRational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    GaussianRational inv = GaussianRational(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      GaussianRational factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

QiMatrix inverse(const QiMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> pivots;
  QiMatrix reduced = rref(hstack(m, QiMatrix::identity(n)), pivots);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) throw InvalidStructure("matrix is singular");
  return reduced.column_range(n, n);
}

Subspace Subspace::span(const QiMatrix& columns) {
  std::vector<std::size_t> pivots;
  QiMatrix reduced = rref(columns.transpose(), pivots);
  return Subspace(columns.rows(), reduced.row_range(0, pivots.size()).transpose());
}

Subspace Subspace::span(const std::vector<QiVector>& vectors, std::size_t ambient_dim) {
  return span(QiMatrix::from_columns(vectors, ambient_dim));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, QiMatrix(ambient_dim, 0)); }

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(ambient_dim, QiMatrix::identity(ambient_dim)); }

bool Subspace::contains(const QiVector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
  return rank(hstack(basis_, QiMatrix::from_columns({v}, ambient_dim_))) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("subspaces live in different ambient spaces");
  return rank(hstack(basis_, other.basis_)) == dim();
}

bool Subspace::is_real() const {
  return std::all_of(basis_.entries().begin(), basis_.entries().end(), [](const auto& x) { return x.is_real(); });
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "span{";
  for (std::size_t c = 0; c < s.dim(); ++c) {
    os << (c ? ", (" : "(");
    for (std::size_t r = 0; r < s.ambient_dim(); ++r) os << (r ? ", " : "") << s.basis()(r, c);
    os << ")";
  }
  return os << "} in Q(i)^" << s.ambient_dim();
}

Subspace kernel(const QiMatrix& m) {
  std::vector<std::size_t> pivots;
  QiMatrix reduced = rref(m, pivots);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QiVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QiVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  // x in a ∩ b  <=>  A·s = B·t  <=>  [A | -B](s, t) = 0.
  QiMatrix stacked = hstack(a.basis(), GaussianRational(-1) * b.basis());
  Subspace relations = kernel(stacked);
  QiMatrix s = relations.basis().row_range(0, a.dim());
  return Subspace::span(a.basis() * s);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  return Subspace::span(hstack(a.basis(), b.basis()));
}

Subspace conjugate(const Subspace& s) { return Subspace::span(s.basis().conj()); }

bool direct_sum_spans(std::span<const Subspace> parts) {
  if (parts.empty()) return true;
  const std::size_t n = parts.front().ambient_dim();
  std::size_t total = 0;
  QiMatrix all(n, 0);
  for (const auto& part : parts) {
    if (part.ambient_dim() != n) throw DimensionMismatch("direct_sum_spans: ambient dimensions differ");
    total += part.dim();
    all = hstack(all, part.basis());
  }
  return total == n && rank(all) == n;
}

QiMatrix coordinates_in(const Subspace& s, const QiMatrix& vectors) {
  if (vectors.rows() != s.ambient_dim()) throw DimensionMismatch("coordinates_in: ambient dimensions differ");
  std::vector<std::size_t> pivots;
  QiMatrix reduced = rref(hstack(s.basis(), vectors), pivots);
  if (pivots.size() != s.dim() || (!pivots.empty() && pivots.back() >= s.dim()))
    throw InvalidStructure("coordinates_in: vector outside the subspace");
  return reduced.row_range(0, s.dim()).column_range(s.dim(), vectors.cols());
}

}  // namespace hodgekit
