#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "dbracket/rational.hpp"

namespace dbracket {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(std::span<const Rational> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

/// Dense row-major matrix of exact rationals. Zero rows or zero columns are
/// valid values (the entry array is then empty).
class RectMatrix {
public:
  RectMatrix() = default;
  RectMatrix(std::size_t rows, std::size_t cols);
  RectMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RectMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RectMatrix identity(std::size_t n);
  /// diag(I_r, 0) of the given size.
  static RectMatrix rank_pattern(std::size_t rows, std::size_t cols, std::size_t r);
  /// Matrix unit with a single one at (i, j), zero-based.
  static RectMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static RectMatrix from_rows(std::span<const Vector> rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }
  [[nodiscard]] std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * cols_, cols_);
  }
  [[nodiscard]] Vector column(std::size_t j) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] RectMatrix transpose() const;
  [[nodiscard]] RectMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const RectMatrix& b);

  [[nodiscard]] Vector apply(std::span<const Rational> v) const;

  RectMatrix& operator+=(const RectMatrix& rhs);
  RectMatrix& operator-=(const RectMatrix& rhs);

  friend RectMatrix operator+(RectMatrix a, const RectMatrix& b) { return a += b; }
  friend RectMatrix operator-(RectMatrix a, const RectMatrix& b) { return a -= b; }
  friend RectMatrix operator-(const RectMatrix& a);
  friend RectMatrix operator*(const RectMatrix& a, const RectMatrix& b);
  friend RectMatrix operator*(const Rational& s, const RectMatrix& a);
  friend bool operator==(const RectMatrix& a, const RectMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RectMatrix& m);

/// Result of Gauss-Jordan elimination: `transform * input == reduced`, with
/// `reduced` in reduced row echelon form. Pivots are chosen as the first
/// nonzero entry scanning columns left to right.
struct RowReduction {
  RectMatrix reduced;
  RectMatrix transform;
  std::vector<std::size_t> pivot_columns;

  [[nodiscard]] std::size_t rank() const { return pivot_columns.size(); }
};

RowReduction row_reduce(const RectMatrix& m);

std::size_t rank(const RectMatrix& m);

/// Invertible `left`, `right` with `left * m * right == diag(I_r, 0)`.
struct RankNormalTransforms {
  RectMatrix left;
  RectMatrix right;
  std::size_t rank = 0;
};

RankNormalTransforms rank_normal_transforms(const RectMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vector> nullspace(const RectMatrix& m);

/// Throws NonSquare or SingularMatrix.
RectMatrix invert(const RectMatrix& m);

/// Incrementally maintained reduced row echelon basis of a span of vectors.
/// Used wherever a subspace is grown one vector at a time (derived series,
/// brackets of subspaces) so the stacked matrix is never materialized.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Adds v to the span; returns false when v was already in it.
  bool insert(Vector v);
  [[nodiscard]] bool contains(Vector v) const;

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] const std::vector<Vector>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
  void reduce(Vector& v) const;

  std::size_t ambient_dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace dbracket
