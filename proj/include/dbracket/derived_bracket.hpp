#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dbracket/matrix.hpp"
#include "dbracket/super_matrix.hpp"

namespace dbracket {

/// Odd element B of g_1, stored through its upper-right m x n block b.
/// B^2 = 0 holds for every such element because of its block position.
class OddGenerator {
public:
  OddGenerator(SuperShape shape, RectMatrix b);

  /// B with b = diag(I_r, 0).
  static OddGenerator normal(SuperShape shape, std::size_t r);

  [[nodiscard]] const SuperShape& shape() const { return shape_; }
  [[nodiscard]] const RectMatrix& b() const { return b_; }
  [[nodiscard]] SuperMatrix as_super_matrix() const { return SuperMatrix::plus_one(shape_, b_); }

private:
  SuperShape shape_;
  RectMatrix b_;
};

/// p_m * b * p_n == b_normal == diag(I_r, 0)
struct NormalFormCertificate {
  RectMatrix p_m;
  RectMatrix p_n;
  RectMatrix b_normal;
  std::size_t rank = 0;
};

NormalFormCertificate normal_form(const OddGenerator& generator);

/// [X, [B, Y]] evaluated literally with two super brackets. X and Y must lie
/// in g_{-1}; the result does too.
SuperMatrix derived_bracket_raw(const SuperMatrix& x, const SuperMatrix& y, const OddGenerator& generator);

// Coordinates on g_{-1}. The basis element F_{ij} (1 <= i <= n, 1 <= j <= m)
// is the C-block matrix unit at row i, column j; basis index (i-1)*m + (j-1).
struct BasisLabel {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

std::size_t basis_index(const SuperShape& shape, std::size_t i, std::size_t j);
BasisLabel basis_label(const SuperShape& shape, std::size_t index);
std::string label_name(const BasisLabel& label);  // "F_i_j"

Vector coordinates_of(const SuperMatrix& x);
Vector coordinates_of_block(const RectMatrix& c);
RectMatrix block_of(const SuperShape& shape, std::span<const Rational> coords);
SuperMatrix element_of(const SuperShape& shape, std::span<const Rational> coords);

struct Term {
  std::size_t basis = 0;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse vector: terms sorted by basis index, coefficients nonzero.
using Terms = std::vector<Term>;

Terms to_terms(std::span<const Rational> v);

/// Finite-dimensional Lie algebra on g_{-1} given by structure constants.
///
/// Only pairs (u, v) with u < v and a nonzero bracket are stored; the
/// remaining entries follow from antisymmetry.
class DerivedAlgebra {
public:
  using Constants = std::map<std::pair<std::size_t, std::size_t>, Terms>;

  DerivedAlgebra(SuperShape shape, std::size_t rank_r, Constants constants);

  [[nodiscard]] const SuperShape& shape() const { return shape_; }
  [[nodiscard]] std::size_t rank_r() const { return rank_r_; }
  [[nodiscard]] std::size_t dim() const { return shape_.m() * shape_.n(); }
  [[nodiscard]] BasisLabel label(std::size_t u) const { return basis_label(shape_, u); }
  [[nodiscard]] std::vector<BasisLabel> basis_labels() const;
  [[nodiscard]] const Constants& constants() const { return constants_; }
  [[nodiscard]] bool is_abelian() const { return constants_.empty(); }

  /// [[F_u, F_v]] with the sign of the stored orientation applied.
  [[nodiscard]] Terms bracket_basis(std::size_t u, std::size_t v) const;
  [[nodiscard]] Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Matrix of ad F_u in the F basis.
  [[nodiscard]] RectMatrix adjoint(std::size_t u) const;

  friend bool operator==(const DerivedAlgebra&, const DerivedAlgebra&) = default;

private:
  SuperShape shape_;
  std::size_t rank_r_;
  Constants constants_;
};

/// Throws DimensionMismatch when u or v has the wrong length.
Vector bracket_coords(const DerivedAlgebra& algebra, std::span<const Rational> u, std::span<const Rational> v);

/// Algebra for B in rank-r normal form. Throws RankOutOfRange.
DerivedAlgebra build_algebra(SuperShape shape, std::size_t r);

/// Algebra for an arbitrary odd generator; rank_r records rank(b).
DerivedAlgebra build_algebra_from_general_B(const OddGenerator& generator);

}  // namespace dbracket
