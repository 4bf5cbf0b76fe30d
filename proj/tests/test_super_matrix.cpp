#include <doctest.h>

#include "dbracket/errors.hpp"
#include "dbracket/super_matrix.hpp"

using namespace dbracket;

namespace {

// plain commutator / anticommutator on full matrices
RectMatrix full_bracket(const RectMatrix& x, const RectMatrix& y, bool both_odd) {
  return both_odd ? x * y + y * x : x * y - y * x;
}

}  // namespace

TEST_CASE("odd units anticommute into the diagonal") {
  const SuperShape shape(2, 1);
  const SuperMatrix e13 = SuperMatrix::unit(shape, 0, 2);
  const SuperMatrix e31 = SuperMatrix::unit(shape, 2, 0);
  CHECK(super_bracket(e13, e31) == SuperMatrix::unit(shape, 0, 0) + SuperMatrix::unit(shape, 2, 2));
}

TEST_CASE("bracket of homogeneous units agrees with full matrices") {
  const SuperShape shape(2, 2);
  const std::size_t s = shape.size();
  auto odd = [&](std::size_t i, std::size_t j) { return (i < 2) != (j < 2); };
  for (std::size_t a = 0; a < s * s; ++a)
    for (std::size_t b = 0; b < s * s; ++b) {
      const RectMatrix x = RectMatrix::unit(s, s, a / s, a % s);
      const RectMatrix y = RectMatrix::unit(s, s, b / s, b % s);
      const bool both = odd(a / s, a % s) && odd(b / s, b % s);
      CHECK(super_bracket(SuperMatrix::from_full(shape, x), SuperMatrix::from_full(shape, y)).to_full() ==
            full_bracket(x, y, both));
    }
}

TEST_CASE("mixed elements are split by parity") {
  const SuperShape shape(1, 1);
  const SuperMatrix x = SuperMatrix::unit(shape, 0, 0) + SuperMatrix::unit(shape, 0, 1);
  const SuperMatrix y = SuperMatrix::unit(shape, 0, 1);
  // [E11, E12] + [E12, E12] = E12 + 0
  CHECK(super_bracket(x, y) == SuperMatrix::unit(shape, 0, 1));
  CHECK(grade_of(x).tag == GradeTag::mixed);
}

TEST_CASE("Z-grading") {
  const SuperShape shape(2, 3);
  const SuperMatrix c = SuperMatrix::unit(shape, 3, 1);
  const SuperMatrix b = SuperMatrix::unit(shape, 1, 4);
  const SuperMatrix a = SuperMatrix::unit(shape, 0, 1);
  CHECK(grade_of(c).tag == GradeTag::minus_one);
  CHECK(grade_of(b).tag == GradeTag::plus_one);
  CHECK(grade_of(a).tag == GradeTag::zero);
  CHECK(grade_of(SuperMatrix(shape)).is_zero);
  const SuperMatrix sum = a + b + c;
  CHECK(z_component(sum, -1) == c);
  CHECK(z_component(sum, 0) == a);
  CHECK(z_component(sum, 1) == b);
  CHECK(z_component(sum, 2).is_zero());
  CHECK(super_bracket(c, SuperMatrix::unit(shape, 4, 0)).is_zero());
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(SuperShape(0, 2), ShapeMismatch);
  const SuperShape shape(1, 2);
  CHECK_THROWS_AS(SuperMatrix(shape, RectMatrix(1, 1), RectMatrix(2, 1), RectMatrix(2, 1), RectMatrix(2, 2)),
                  ShapeMismatch);
  CHECK_THROWS_AS(super_bracket(SuperMatrix(shape), SuperMatrix(SuperShape(2, 1))), ShapeMismatch);
}
