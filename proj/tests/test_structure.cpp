#include <doctest.h>

#include "dbracket/errors.hpp"
#include "dbracket/structure.hpp"

using namespace dbracket;

namespace {

// Center dimension by the case split, written out independently.
std::size_t expected_center(std::size_t m, std::size_t n, std::size_t r) {
  if (r == 0) return m * n;
  if (r == m && r == n) return 1;
  if (r == m || r == n) return 0;
  return (m - r) * (n - r);
}

}  // namespace

TEST_CASE("gl(5|6) with rank two") {
  const DecompositionReport report = verify_levi_decomposition(SuperShape(5, 6), 2);
  CHECK(report.dim_total == 30);
  CHECK(report.dim_levi == 3);
  CHECK(report.dim_radical == 27);
  CHECK(report.dim_center == 12);
  CHECK_FALSE(report.is_abelian);
  CHECK_FALSE(report.is_solvable);
}

TEST_CASE("gl(7|7) with rank five") {
  const DecompositionReport report = verify_levi_decomposition(SuperShape(7, 7), 5);
  CHECK(report.dim_levi == 24);
  CHECK(report.dim_radical == 25);
  CHECK(report.dim_center == 4);
}

TEST_CASE("rank zero is abelian with everything central") {
  const DecompositionReport report = verify_levi_decomposition(SuperShape(2, 2), 0);
  CHECK(report.is_abelian);
  CHECK(report.is_solvable);
  CHECK(report.dim_center == 4);
  CHECK(report.dim_levi == 0);
  CHECK(report.dim_radical == 4);
  CHECK_THROWS_AS(radical_closed_form(SuperShape(2, 2), 0), RankOutOfRange);
}

TEST_CASE("center dimensions over every case") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t r = 0; r <= std::min(m, n); ++r) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(r);
        const DerivedAlgebra a = build_algebra(SuperShape(m, n), r);
        CHECK(center_bruteforce(a).dim() == expected_center(m, n, r));
      }
}

TEST_CASE("rank one: solvable with a one-dimensional trace line") {
  const DerivedAlgebra a = build_algebra(SuperShape(3, 2), 1);
  const Subspace whole = Subspace::whole(a.dim());
  CHECK(is_solvable(a, whole));
  CHECK(radical_via_killing(a).dim() == a.dim());
}

TEST_CASE("derived series conventions") {
  const DerivedAlgebra abelian = build_algebra(SuperShape(2, 2), 0);
  const auto series = derived_series(abelian, Subspace::whole(4));
  REQUIRE(series.size() == 2);
  CHECK(series[1].dim() == 0);

  // sl(2) corner of the (2|2) rank-2 algebra is perfect
  const DerivedAlgebra full = build_algebra(SuperShape(2, 2), 2);
  const Subspace levi = levi_closed_form(SuperShape(2, 2), 2);
  CHECK(derived_series(full, levi).size() == 1);
  CHECK_FALSE(is_solvable(full, levi));

  // span(F11, F12) is closed, span(F12, F21) is not
  const Subspace closed = Subspace::span(4, {Vector{1, 0, 0, 0}, Vector{0, 1, 0, 0}});
  CHECK(is_subalgebra(full, closed));
  const Subspace broken = Subspace::span(4, {Vector{0, 1, 0, 0}, Vector{0, 0, 1, 0}});
  CHECK_FALSE(is_subalgebra(full, broken));
  CHECK_THROWS_AS(derived_series(full, broken), NotASubalgebra);
}

TEST_CASE("Killing form of the gl(2) case") {
  // (2|2) with r = 2 is gl(2); its Killing form is 4 tr(xy) - 2 tr(x) tr(y).
  const DerivedAlgebra a = build_algebra(SuperShape(2, 2), 2);
  const BilinearForm k = killing_form(a);
  const SuperShape shape(2, 2);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      const RectMatrix x = block_of(shape, unit_vector(4, u));
      const RectMatrix y = block_of(shape, unit_vector(4, v));
      CHECK(k.gram(u, v) == Rational(4) * (x * y).trace() - Rational(2) * x.trace() * y.trace());
    }
}

TEST_CASE("subspace comparisons") {
  const Subspace a = Subspace::span(3, {Vector{1, 1, 0}, Vector{0, 1, 1}, Vector{1, 2, 1}});
  CHECK(a.dim() == 2);
  const Subspace b = Subspace::span(3, {Vector{1, 0, -1}, Vector{2, 3, 1}});
  CHECK(a.same_span(b));
  CHECK(intersection_dim(a, Subspace::span(3, {Vector{0, 0, 1}})) == 0);
  CHECK(sum(a, Subspace::span(3, {Vector{0, 0, 1}})).dim() == 3);
  CHECK_THROWS(Subspace(3, {Vector{1, 0, 0}, Vector{2, 0, 0}}));
}

TEST_CASE("radical and Levi dimensions follow mn - r^2 + 1 and r^2 - 1") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t r = 1; r <= std::min(m, n); ++r) {
        CHECK(radical_closed_form(SuperShape(m, n), r).dim() == m * n - r * r + 1);
        CHECK(levi_closed_form(SuperShape(m, n), r).dim() == r * r - 1);
      }
}
