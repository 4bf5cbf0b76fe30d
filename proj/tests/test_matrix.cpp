#include <doctest.h>

#include <random>

#include "dbracket/errors.hpp"
#include "dbracket/matrix.hpp"
#include "dbracket/sweep.hpp"

using namespace dbracket;

TEST_CASE("rank of small matrices") {
  CHECK(rank(RectMatrix{{0, 1}, {1, 1}}) == 2);
  CHECK(rank(RectMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RectMatrix(3, 4)) == 0);
  CHECK(rank(RectMatrix::rank_pattern(4, 3, 2)) == 2);
}

TEST_CASE("nullspace of a row") {
  const auto basis = nullspace(RectMatrix{{1, 1}});
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == -basis[0][1]);
  CHECK(!basis[0][0].is_zero());
}

TEST_CASE("inverse of a unipotent matrix") {
  CHECK(invert(RectMatrix{{1, 1}, {0, 1}}) == (RectMatrix{{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(invert(RectMatrix{{1, 2}, {2, 4}}), SingularMatrix);
  CHECK_THROWS_AS(invert(RectMatrix(2, 3)), NonSquare);
}

TEST_CASE("row reduction tracks the transform") {
  const RectMatrix m{{0, 2, 4}, {1, 1, 1}, {1, 3, 5}};
  const RowReduction red = row_reduce(m);
  CHECK(red.transform * m == red.reduced);
  CHECK(red.rank() == 2);
  CHECK(red.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rank normal transforms on random matrices") {
  std::mt19937_64 rng(11);
  for (std::size_t rows = 1; rows <= 4; ++rows)
    for (std::size_t cols = 1; cols <= 4; ++cols)
      for (std::size_t r = 0; r <= std::min(rows, cols); ++r) {
        const RectMatrix m = random_rational_matrix(rows, cols, r, rng);
        const RankNormalTransforms t = rank_normal_transforms(m);
        CHECK(t.rank == rank(m));
        CHECK(t.left * m * t.right == RectMatrix::rank_pattern(rows, cols, t.rank));
        CHECK(rank(t.left) == rows);
        CHECK(rank(t.right) == cols);
      }
}

TEST_CASE("nullspace vectors are killed and independent") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const RectMatrix m = random_rational_matrix(3, 5, k % 4, rng);
    const auto basis = nullspace(m);
    CHECK(basis.size() == 5 - rank(m));
    for (const auto& v : basis) CHECK(is_zero(m.apply(v)));
    CHECK(rank(RectMatrix::from_rows(basis, 5)) == basis.size());
  }
}

TEST_CASE("echelon basis insertion") {
  EchelonBasis e(3);
  CHECK(e.insert({1, 2, 3}));
  CHECK(e.insert({0, 1, 1}));
  CHECK_FALSE(e.insert({2, 5, 7}));
  CHECK(e.contains({1, 3, 4}));
  CHECK_FALSE(e.contains({0, 0, 1}));
  CHECK(e.dim() == 2);
}

TEST_CASE("matrix size errors") {
  CHECK_THROWS_AS(RectMatrix(2, 2, std::vector<Rational>(3)), DimensionMismatch);
  CHECK_THROWS_AS(RectMatrix(2, 3) * RectMatrix(2, 3), DimensionMismatch);
  CHECK_THROWS_AS(RectMatrix(2, 3) + RectMatrix(3, 2), DimensionMismatch);
}
