#pragma once

#include <cstddef>

#include "dbracket/matrix.hpp"

namespace dbracket {

/// Dimensions (m | n) of the even and odd parts; both at least one.
class SuperShape {
public:
  SuperShape(std::size_t m, std::size_t n);

  [[nodiscard]] std::size_t m() const { return m_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return m_ + n_; }
  [[nodiscard]] SuperShape flipped() const { return {n_, m_}; }

  friend bool operator==(const SuperShape&, const SuperShape&) = default;

private:
  std::size_t m_;
  std::size_t n_;
};

/// Element of gl(m|n) held as its four blocks
///
///     [ A (m x m)  B (m x n) ]
///     [ C (n x m)  D (n x n) ]
///
/// A and D are even (degree 0), B is odd of degree +1, C is odd of degree -1.
class SuperMatrix {
public:
  explicit SuperMatrix(SuperShape shape);
  SuperMatrix(SuperShape shape, RectMatrix a, RectMatrix b, RectMatrix c, RectMatrix d);

  static SuperMatrix from_full(SuperShape shape, const RectMatrix& full);
  static SuperMatrix identity(SuperShape shape);
  /// Element of g_{-1} whose C block is `c`.
  static SuperMatrix minus_one(SuperShape shape, RectMatrix c);
  /// Element of g_{1} whose B block is `b`.
  static SuperMatrix plus_one(SuperShape shape, RectMatrix b);
  /// Matrix unit e_{ij} of the full (m+n)x(m+n) matrix, zero-based.
  static SuperMatrix unit(SuperShape shape, std::size_t i, std::size_t j);

  [[nodiscard]] const SuperShape& shape() const { return shape_; }
  [[nodiscard]] const RectMatrix& a() const { return a_; }
  [[nodiscard]] const RectMatrix& b() const { return b_; }
  [[nodiscard]] const RectMatrix& c() const { return c_; }
  [[nodiscard]] const RectMatrix& d() const { return d_; }

  [[nodiscard]] RectMatrix to_full() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] SuperMatrix even_part() const;
  [[nodiscard]] SuperMatrix odd_part() const;

  friend SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y);
  friend SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y);
  friend SuperMatrix operator*(const Rational& s, const SuperMatrix& x);
  /// Plain matrix product.
  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y);
  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;

private:
  SuperShape shape_;
  RectMatrix a_;
  RectMatrix b_;
  RectMatrix c_;
  RectMatrix d_;
};

std::ostream& operator<<(std::ostream& os, const SuperMatrix& x);

enum class GradeTag { minus_one, zero, plus_one, even, odd, mixed };

const char* to_string(GradeTag tag);

struct Grade {
  GradeTag tag = GradeTag::minus_one;
  // The zero matrix is homogeneous of every degree; its tag is meaningless.
  bool is_zero = false;
};

/// Super commutator XY - (-1)^{|X||Y|} YX, extended bilinearly to
/// inputs that are not homogeneous.
SuperMatrix super_bracket(const SuperMatrix& x, const SuperMatrix& y);

/// Component of degree `degree` in the short grading g_{-1} + g_0 + g_1.
SuperMatrix z_component(const SuperMatrix& x, int degree);

Grade grade_of(const SuperMatrix& x);

}  // namespace dbracket
