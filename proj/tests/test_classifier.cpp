#include <doctest.h>

#include <random>

#include "dbracket/classifier.hpp"
#include "dbracket/errors.hpp"
#include "dbracket/sweep.hpp"

using namespace dbracket;

TEST_CASE("flip witness between gl(5|6) and gl(6|5)") {
  const ClassificationVerdict v = iso_decision(AlgebraSpec{5, 6, 2}, AlgebraSpec{6, 5, 2});
  CHECK(v.isomorphic);
  REQUIRE(v.witness_kind);
  CHECK(*v.witness_kind == WitnessKind::flip);
  CHECK(verify_homomorphism(*v.witness, build_algebra(SuperShape(5, 6), 2), build_algebra(SuperShape(6, 5), 2)));
}

TEST_CASE("different ranks are separated by the Levi dimension") {
  const ClassificationVerdict v = iso_decision(AlgebraSpec{5, 6, 2}, AlgebraSpec{5, 6, 3});
  CHECK_FALSE(v.isomorphic);
  REQUIRE(v.separator);
  CHECK(v.separator->invariant == "dim_levi");
  CHECK(v.separator->first == 3);
  CHECK(v.separator->second == 8);
}

TEST_CASE("equal dimension and rank, different shape: the center separates") {
  // (10 - 2)(3 - 2) = 8
  const ClassificationVerdict v = iso_decision(AlgebraSpec{5, 6, 2}, AlgebraSpec{10, 3, 2});
  CHECK_FALSE(v.isomorphic);
  REQUIRE(v.separator);
  CHECK(v.separator->invariant == "dim_center");
  CHECK(v.separator->first == 12);
  CHECK(v.separator->second == 8);
}

TEST_CASE("gl(1|1): ranks zero and one both give the line") {
  const ClassificationVerdict v = iso_decision(AlgebraSpec{1, 1, 0}, AlgebraSpec{1, 1, 1});
  CHECK(v.isomorphic);
  CHECK(v.abelian_extension);
}

TEST_CASE("abelian against nonabelian") {
  const ClassificationVerdict v = iso_decision(AlgebraSpec{2, 2, 0}, AlgebraSpec{2, 2, 1});
  CHECK_FALSE(v.isomorphic);
  CHECK(v.separator->invariant == "abelian");
  const ClassificationVerdict w = iso_decision(AlgebraSpec{2, 3, 0}, AlgebraSpec{1, 6, 0});
  CHECK(w.isomorphic);
  const ClassificationVerdict x = iso_decision(AlgebraSpec{2, 3, 0}, AlgebraSpec{2, 2, 0});
  CHECK_FALSE(x.isomorphic);
  CHECK(x.separator->invariant == "dim");
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(iso_decision(AlgebraSpec{2, 3, 3}, AlgebraSpec{2, 3, 1}), RankOutOfRange);
  CHECK_THROWS_AS(iso_decision(AlgebraSpec{0, 3, 0}, AlgebraSpec{2, 3, 1}), ShapeMismatch);
}

TEST_CASE("flipping twice is the identity") {
  const SuperShape shape(2, 3);
  CHECK(flip_iso(shape, 1).then(flip_iso(shape.flipped(), 1)).matrix == RectMatrix::identity(6));
}

TEST_CASE("supertranspose and the block swap") {
  const SuperShape shape(1, 2);
  const SuperMatrix x(shape, RectMatrix{{1}}, RectMatrix{{2, 3}}, RectMatrix{{4}, {5}}, RectMatrix{{6, 7}, {8, 9}});
  const SuperMatrix st = supertranspose(x);
  CHECK(st.b() == (RectMatrix{{4, 5}}));
  CHECK(st.c() == (RectMatrix{{-2}, {-3}}));
  const SuperMatrix q = flip_superalgebra(x);
  CHECK(q.shape() == SuperShape(2, 1));
  CHECK(q.a() == x.d());
  CHECK(q.b() == x.c());
  CHECK(flip_superalgebra(q) == x);
}

TEST_CASE("witnesses for general generators are composed conjugations") {
  std::mt19937_64 rng(21);
  const SuperShape shape(2, 3);
  auto full_rank = [&](std::size_t rows, std::size_t cols) {
    RectMatrix b = random_rational_matrix(rows, cols, 2, rng);
    while (rank(b) < 2) b = random_rational_matrix(rows, cols, 2, rng);
    return b;
  };
  for (int k = 0; k < 5; ++k) {
    const OddGenerator g(shape, full_rank(2, 3));
    const OddGenerator h(shape.flipped(), full_rank(3, 2));
    const ClassificationVerdict v = iso_decision(g, h);
    CHECK(v.isomorphic);
    CHECK(*v.witness_kind == WitnessKind::composed_conjugation);
    CHECK(verify_homomorphism(*v.witness, build_algebra_from_general_B(g), build_algebra_from_general_B(h)));
  }
}

TEST_CASE("a singular map is not an isomorphism") {
  const DerivedAlgebra a = build_algebra(SuperShape(1, 2), 1);
  LinearMap zero{2, 2, RectMatrix(2, 2)};
  CHECK_FALSE(verify_homomorphism(zero, a, a));
  CHECK_THROWS_AS(verify_homomorphism(LinearMap::identity(3), a, a), DimensionMismatch);
}

TEST_CASE("bracket-preserving bijections are told apart from others") {
  // [[F_1_1, F_2_1]] = -F_2_1
  const DerivedAlgebra a = build_algebra(SuperShape(1, 2), 1);
  CHECK(verify_homomorphism(LinearMap::identity(2), a, a));
  CHECK(verify_homomorphism(LinearMap{2, 2, RectMatrix{{1, 0}, {0, 2}}}, a, a));
  CHECK_FALSE(verify_homomorphism(LinearMap{2, 2, RectMatrix{{2, 0}, {0, 1}}}, a, a));
  CHECK_FALSE(verify_homomorphism(LinearMap{2, 2, RectMatrix{{0, 1}, {1, 0}}}, a, a));
}

TEST_CASE("transposing without the sign reverses the bracket") {
  const SuperShape shape(2, 3);
  LinearMap plain = flip_iso(shape, 2);
  plain.matrix = Rational(-1) * plain.matrix;
  CHECK_FALSE(verify_homomorphism(plain, build_algebra(shape, 2), build_algebra(shape.flipped(), 2)));
}
