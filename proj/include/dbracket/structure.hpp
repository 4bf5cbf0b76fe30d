#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dbracket/derived_bracket.hpp"
#include "dbracket/matrix.hpp"

namespace dbracket {

/// Subspace of an algebra's coordinate space held by a linearly independent
/// basis. Bases are not canonical: compare subspaces with `same_span`, never
/// by basis.
class Subspace {
public:
  /// Throws DimensionMismatch if the vectors are dependent or the wrong length.
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

  /// Independent basis of the span of arbitrary vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }

  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool is_subspace_of(const Subspace& other) const;
  /// Equality by double inclusion.
  [[nodiscard]] bool same_span(const Subspace& other) const;

private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  EchelonBasis echelon_;
};

Subspace sum(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// Span of all brackets [[v, w]] with v in `left`, w in `right`.
Subspace bracket_span(const DerivedAlgebra& algebra, const Subspace& left, const Subspace& right);
bool is_subalgebra(const DerivedAlgebra& algebra, const Subspace& v);
bool is_ideal(const DerivedAlgebra& algebra, const Subspace& v);

struct BilinearForm {
  std::size_t dim = 0;
  RectMatrix gram;
};

/// trace(ad x ad y) from a list of adjoint matrices in a fixed basis.
RectMatrix killing_gram(const std::vector<RectMatrix>& adjoints);

BilinearForm killing_form(const DerivedAlgebra& algebra);

/// {W : [[X, W]] = 0 for all X} as the kernel of the stacked adjoints.
Subspace center_bruteforce(const DerivedAlgebra& algebra);
Subspace center_closed_form(const SuperShape& shape, std::size_t r);

/// V, V^(1), V^(2), ... up to and including the first term equal to its
/// successor. Throws NotASubalgebra.
std::vector<Subspace> derived_series(const DerivedAlgebra& algebra, const Subspace& v);
bool is_solvable(const DerivedAlgebra& algebra, const Subspace& v);

/// Radical as the Killing-orthogonal complement of the derived algebra.
Subspace radical_via_killing(const DerivedAlgebra& algebra);
/// scalar pattern sum_{i<=r} F_ii plus every F_ij with i > r or j > r (r >= 1)
Subspace radical_closed_form(const SuperShape& shape, std::size_t r);
/// traceless r x r patterns in the leading corner (r >= 1)
Subspace levi_closed_form(const SuperShape& shape, std::size_t r);

/// Basis of sl(r): E_ii - E_(i+1)(i+1) followed by the off-diagonal units.
std::vector<RectMatrix> sl_basis(std::size_t r);
/// Coordinates of the element whose leading r x r C-block corner is `corner`.
Vector embed_corner(const SuperShape& shape, const RectMatrix& corner);

/// Structure constants induced on a complement S of an ideal R, i.e. the
/// quotient algebra A/R written in the basis of S. Returns one adjoint
/// matrix per basis vector of S.
std::vector<RectMatrix> quotient_adjoints(const DerivedAlgebra& algebra, const Subspace& complement,
                                          const Subspace& ideal);

struct DecompositionReport {
  SuperShape shape;
  std::size_t rank_r = 0;
  std::size_t dim_total = 0;
  std::size_t dim_levi = 0;
  std::size_t dim_radical = 0;
  std::size_t dim_center = 0;
  bool is_abelian = false;
  bool is_solvable = false;
  std::vector<std::string> checks;
};

/// Builds the rank-r algebra, checks the closed-form Levi decomposition
/// against the brute-force oracles and returns the measured dimensions.
/// Throws VerificationFailure naming the first check that failed.
DecompositionReport verify_levi_decomposition(const SuperShape& shape, std::size_t r);

/// Same checks on an already-built algebra with the given rank.
DecompositionReport verify_levi_decomposition(const DerivedAlgebra& algebra);

}  // namespace dbracket
