#include "dbracket/matrix.hpp"

#include <ostream>
#include <utility>

#include "dbracket/errors.hpp"

namespace dbracket {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v[index] = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) out[i] -= b[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = s * v[i];
  return out;
}

RectMatrix::RectMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RectMatrix::RectMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw DimensionMismatch("entry count " + std::to_string(entries_.size()) + " does not match " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
}

RectMatrix::RectMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RectMatrix RectMatrix::identity(std::size_t n) { return rank_pattern(n, n, n); }

RectMatrix RectMatrix::rank_pattern(std::size_t rows, std::size_t cols, std::size_t r) {
  RectMatrix m(rows, cols);
  for (std::size_t i = 0; i < r && i < rows && i < cols; ++i) m(i, i) = 1;
  return m;
}

RectMatrix RectMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  RectMatrix m(rows, cols);
  m(i, j) = 1;
  return m;
}

RectMatrix RectMatrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  RectMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector RectMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool RectMatrix::is_zero() const { return dbracket::is_zero(entries_); }

Rational RectMatrix::trace() const {
  if (!is_square()) throw NonSquare(rows_, cols_);
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RectMatrix RectMatrix::transpose() const {
  RectMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RectMatrix RectMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionMismatch("block out of range");
  RectMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void RectMatrix::set_block(std::size_t row0, std::size_t col0, const RectMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw DimensionMismatch("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

Vector RectMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
  Vector out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) add_product(out[i], (*this)(i, j), v[j]);
  }
  return out;
}

RectMatrix& RectMatrix::operator+=(const RectMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum of different sizes");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!rhs.entries_[k].is_zero()) entries_[k] += rhs.entries_[k];
  return *this;
}

RectMatrix& RectMatrix::operator-=(const RectMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference of different sizes");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!rhs.entries_[k].is_zero()) entries_[k] -= rhs.entries_[k];
  return *this;
}

RectMatrix operator-(const RectMatrix& a) {
  RectMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (!a.entries_[k].is_zero()) out.entries_[k] = -a.entries_[k];
  return out;
}

RectMatrix operator*(const RectMatrix& a, const RectMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                            std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  RectMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) add_product(c(i, j), aik, b(k, j));
    }
  return c;
}

RectMatrix operator*(const Rational& s, const RectMatrix& a) {
  RectMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (!a.entries_[k].is_zero()) out.entries_[k] = s * a.entries_[k];
  return out;
}

std::ostream& operator<<(std::ostream& os, const RectMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

namespace {

// row_i -= factor * row_k, restricted to columns [from, cols)
void subtract_row(RectMatrix& m, std::size_t i, std::size_t k, const Rational& factor, std::size_t from = 0) {
  for (std::size_t j = from; j < m.cols(); ++j)
    if (!m(k, j).is_zero()) m(i, j) -= factor * m(k, j);
}

void swap_rows(RectMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void scale_row(RectMatrix& m, std::size_t i, const Rational& s, std::size_t from = 0) {
  for (std::size_t j = from; j < m.cols(); ++j)
    if (!m(i, j).is_zero()) m(i, j) *= s;
}

RowReduction reduce(const RectMatrix& input, bool track_transform) {
  RowReduction out{input, track_transform ? RectMatrix::identity(input.rows()) : RectMatrix(), {}};
  RectMatrix& m = out.reduced;
  RectMatrix& t = out.transform;

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;

    swap_rows(m, pivot_row, found);
    if (track_transform) swap_rows(t, pivot_row, found);

    const Rational inv = Rational(1) / m(pivot_row, col);
    scale_row(m, pivot_row, inv, col);
    if (track_transform) scale_row(t, pivot_row, inv);

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      const Rational factor = m(i, col);
      subtract_row(m, i, pivot_row, factor, col);
      if (track_transform) subtract_row(t, i, pivot_row, factor);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return out;
}

}  // namespace

RowReduction row_reduce(const RectMatrix& m) { return reduce(m, true); }

std::size_t rank(const RectMatrix& m) { return reduce(m, false).rank(); }

RankNormalTransforms rank_normal_transforms(const RectMatrix& m) {
  // Row reduction gives left * m = E in RREF. The transpose of E has its r
  // independent columns first and zeros after, so its own RREF is
  // diag(I_r, 0); transposing that column transform back gives `right`.
  RowReduction rows = reduce(m, true);
  RowReduction cols = reduce(rows.reduced.transpose(), true);
  return {std::move(rows.transform), cols.transform.transpose(), rows.rank()};
}

std::vector<Vector> nullspace(const RectMatrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    basis.insert(Vector(m.row(i).begin(), m.row(i).end()));
    if (basis.dim() == m.cols()) break;
  }

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : basis.pivots()) is_pivot[p] = true;

  std::vector<Vector> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < basis.dim(); ++k) {
      const Rational& c = basis.rows()[k][free];
      if (!c.is_zero()) v[basis.pivots()[k]] = -c;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

RectMatrix invert(const RectMatrix& m) {
  if (!m.is_square()) throw NonSquare(m.rows(), m.cols());
  RowReduction r = reduce(m, true);
  if (r.rank() < m.rows()) throw SingularMatrix();
  return std::move(r.transform);
}

void EchelonBasis::reduce(Vector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const Vector& row = rows_[k];
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
}

bool EchelonBasis::insert(Vector v) {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
  reduce(v);
  std::size_t p = 0;
  while (p < ambient_dim_ && v[p].is_zero()) ++p;
  if (p == ambient_dim_) return false;

  const Rational inv = Rational(1) / v[p];
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    const Rational c = row[p];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      if (!v[j].is_zero()) row[j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(Vector v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
  reduce(v);
  return dbracket::is_zero(v);
}

}  // namespace dbracket
