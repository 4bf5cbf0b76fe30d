#include "dbracket/super_matrix.hpp"

#include <ostream>
#include <utility>

#include "dbracket/errors.hpp"

namespace dbracket {

SuperShape::SuperShape(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0) throw ShapeMismatch("super shape needs m >= 1 and n >= 1");
}

SuperMatrix::SuperMatrix(SuperShape shape)
    : shape_(shape),
      a_(shape.m(), shape.m()),
      b_(shape.m(), shape.n()),
      c_(shape.n(), shape.m()),
      d_(shape.n(), shape.n()) {}

SuperMatrix::SuperMatrix(SuperShape shape, RectMatrix a, RectMatrix b, RectMatrix c, RectMatrix d)
    : shape_(shape), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const auto m = shape.m();
  const auto n = shape.n();
  if (a_.rows() != m || a_.cols() != m || b_.rows() != m || b_.cols() != n || c_.rows() != n || c_.cols() != m ||
      d_.rows() != n || d_.cols() != n)
    throw ShapeMismatch("block sizes do not match shape (" + std::to_string(m) + "|" + std::to_string(n) + ")");
}

SuperMatrix SuperMatrix::from_full(SuperShape shape, const RectMatrix& full) {
  const auto m = shape.m();
  const auto n = shape.n();
  if (full.rows() != m + n || full.cols() != m + n) throw ShapeMismatch("full matrix does not match shape");
  return {shape, full.block(0, 0, m, m), full.block(0, m, m, n), full.block(m, 0, n, m), full.block(m, m, n, n)};
}

SuperMatrix SuperMatrix::identity(SuperShape shape) {
  return {shape, RectMatrix::identity(shape.m()), RectMatrix(shape.m(), shape.n()), RectMatrix(shape.n(), shape.m()),
          RectMatrix::identity(shape.n())};
}

SuperMatrix SuperMatrix::minus_one(SuperShape shape, RectMatrix c) {
  return {shape, RectMatrix(shape.m(), shape.m()), RectMatrix(shape.m(), shape.n()), std::move(c),
          RectMatrix(shape.n(), shape.n())};
}

SuperMatrix SuperMatrix::plus_one(SuperShape shape, RectMatrix b) {
  return {shape, RectMatrix(shape.m(), shape.m()), std::move(b), RectMatrix(shape.n(), shape.m()),
          RectMatrix(shape.n(), shape.n())};
}

SuperMatrix SuperMatrix::unit(SuperShape shape, std::size_t i, std::size_t j) {
  return from_full(shape, RectMatrix::unit(shape.size(), shape.size(), i, j));
}

RectMatrix SuperMatrix::to_full() const {
  RectMatrix full(shape_.size(), shape_.size());
  full.set_block(0, 0, a_);
  full.set_block(0, shape_.m(), b_);
  full.set_block(shape_.m(), 0, c_);
  full.set_block(shape_.m(), shape_.m(), d_);
  return full;
}

bool SuperMatrix::is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }

SuperMatrix SuperMatrix::even_part() const {
  return {shape_, a_, RectMatrix(shape_.m(), shape_.n()), RectMatrix(shape_.n(), shape_.m()), d_};
}

SuperMatrix SuperMatrix::odd_part() const {
  return {shape_, RectMatrix(shape_.m(), shape_.m()), b_, c_, RectMatrix(shape_.n(), shape_.n())};
}

namespace {

void require_same_shape(const SuperMatrix& x, const SuperMatrix& y) {
  if (!(x.shape() == y.shape())) throw ShapeMismatch("supermatrices of different shapes");
}

}  // namespace

SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  return {x.shape_, x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
}

SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  return {x.shape_, x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
}

SuperMatrix operator*(const Rational& s, const SuperMatrix& x) {
  return {x.shape_, s * x.a_, s * x.b_, s * x.c_, s * x.d_};
}

SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  return {x.shape_, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

std::ostream& operator<<(std::ostream& os, const SuperMatrix& x) {
  return os << "{A=" << x.a() << ", B=" << x.b() << ", C=" << x.c() << ", D=" << x.d() << "}";
}

const char* to_string(GradeTag tag) {
  switch (tag) {
    case GradeTag::minus_one: return "minus_one";
    case GradeTag::zero: return "zero";
    case GradeTag::plus_one: return "plus_one";
    case GradeTag::even: return "even";
    case GradeTag::odd: return "odd";
    case GradeTag::mixed: return "mixed";
  }
  return "?";
}

SuperMatrix super_bracket(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  // Split into parities; only the odd-odd term anticommutes.
  const SuperMatrix x0 = x.even_part();
  const SuperMatrix x1 = x.odd_part();
  const SuperMatrix y0 = y.even_part();
  const SuperMatrix y1 = y.odd_part();
  SuperMatrix out = x0 * y0 - y0 * x0;
  out = out + (x0 * y1 - y1 * x0);
  out = out + (x1 * y0 - y0 * x1);
  out = out + (x1 * y1 + y1 * x1);
  return out;
}

SuperMatrix z_component(const SuperMatrix& x, int degree) {
  const auto& s = x.shape();
  switch (degree) {
    case -1: return SuperMatrix::minus_one(s, x.c());
    case 1: return SuperMatrix::plus_one(s, x.b());
    case 0: return x.even_part();
    default: return SuperMatrix(s);
  }
}

Grade grade_of(const SuperMatrix& x) {
  const bool has_a = !x.a().is_zero();
  const bool has_b = !x.b().is_zero();
  const bool has_c = !x.c().is_zero();
  const bool has_d = !x.d().is_zero();
  const bool even = has_a || has_d;
  const bool odd = has_b || has_c;

  if (!even && !odd) return {GradeTag::minus_one, true};
  if (even && odd) return {GradeTag::mixed, false};
  if (even) return {GradeTag::zero, false};
  if (has_b && has_c) return {GradeTag::odd, false};
  return {has_c ? GradeTag::minus_one : GradeTag::plus_one, false};
}

}  // namespace dbracket
