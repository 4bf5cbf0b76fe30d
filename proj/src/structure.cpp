#include "dbracket/structure.hpp"

#include <algorithm>
#include <tuple>

#include "dbracket/errors.hpp"

namespace dbracket {

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), echelon_(ambient_dim) {
  for (const auto& v : basis_) {
    if (v.size() != ambient_dim_) throw DimensionMismatch("basis vector length differs from ambient dimension");
    if (!echelon_.insert(v)) throw DimensionMismatch("subspace basis is linearly dependent");
  }
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  EchelonBasis e(ambient_dim);
  for (const auto& v : vectors) {
    e.insert(v);
    if (e.dim() == ambient_dim) break;
  }
  return {ambient_dim, e.rows()};
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < ambient_dim; ++k) basis.push_back(unit_vector(ambient_dim, k));
  return {ambient_dim, std::move(basis)};
}

Subspace Subspace::zero(std::size_t ambient_dim) { return {ambient_dim, {}}; }

bool Subspace::contains(const Vector& v) const { return echelon_.contains(v); }

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw DimensionMismatch("subspaces of different ambient spaces");
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& v) { return other.contains(v); });
}

bool Subspace::same_span(const Subspace& other) const {
  return is_subspace_of(other) && other.is_subspace_of(*this);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces of different ambient spaces");
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) { return a.dim() + b.dim() - sum(a, b).dim(); }

Subspace bracket_span(const DerivedAlgebra& algebra, const Subspace& left, const Subspace& right) {
  EchelonBasis e(algebra.dim());
  for (const auto& x : left.basis())
    for (const auto& y : right.basis()) {
      if (e.dim() == algebra.dim()) break;
      e.insert(algebra.bracket(x, y));
    }
  return {algebra.dim(), e.rows()};
}

bool is_subalgebra(const DerivedAlgebra& algebra, const Subspace& v) {
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = a + 1; b < v.dim(); ++b)
      if (!v.contains(algebra.bracket(v.basis()[a], v.basis()[b]))) return false;
  return true;
}

bool is_ideal(const DerivedAlgebra& algebra, const Subspace& v) {
  return bracket_span(algebra, Subspace::whole(algebra.dim()), v).is_subspace_of(v);
}

RectMatrix killing_gram(const std::vector<RectMatrix>& adjoints) {
  const std::size_t dim = adjoints.size();
  // sparse copy: (row, col, value) of each adjoint
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> sparse(dim);
  for (std::size_t u = 0; u < dim; ++u) {
    const RectMatrix& ad = adjoints[u];
    if (ad.rows() != dim || ad.cols() != dim) throw DimensionMismatch("adjoint matrix size differs from dimension");
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        if (!ad(a, b).is_zero()) sparse[u].emplace_back(a, b, ad(a, b));
  }

  RectMatrix gram(dim, dim);
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = u; v < dim; ++v) {
      Rational t;
      for (const auto& [a, b, x] : sparse[u]) add_product(t, x, adjoints[v](b, a));
      gram(u, v) = t;
      gram(v, u) = t;
    }
  return gram;
}

BilinearForm killing_form(const DerivedAlgebra& algebra) {
  std::vector<RectMatrix> ads;
  ads.reserve(algebra.dim());
  for (std::size_t u = 0; u < algebra.dim(); ++u) ads.push_back(algebra.adjoint(u));
  return {algebra.dim(), killing_gram(ads)};
}

Subspace center_bruteforce(const DerivedAlgebra& algebra) {
  const std::size_t dim = algebra.dim();
  RectMatrix stacked(dim * dim, dim);
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v)
      for (const auto& t : algebra.bracket_basis(u, v)) stacked(u * dim + t.basis, v) = t.coeff;
  return {dim, nullspace(stacked)};
}

namespace {

void require_rank(const SuperShape& shape, std::size_t r, std::size_t min_rank = 0) {
  if (r < min_rank || r > std::min(shape.m(), shape.n()))
    throw RankOutOfRange("rank " + std::to_string(r) + " outside [" + std::to_string(min_rank) + ", " +
                         std::to_string(std::min(shape.m(), shape.n())) + "]");
}

Vector scalar_pattern(const SuperShape& shape, std::size_t r) {
  Vector v(shape.m() * shape.n());
  for (std::size_t i = 1; i <= r; ++i) v[basis_index(shape, i, i)] = 1;
  return v;
}

}  // namespace

Subspace center_closed_form(const SuperShape& shape, std::size_t r) {
  require_rank(shape, r);
  const std::size_t dim = shape.m() * shape.n();
  if (r == 0) return Subspace::whole(dim);
  if (r == shape.m() && r == shape.n()) return {dim, {scalar_pattern(shape, r)}};
  if (r == shape.m() || r == shape.n()) return Subspace::zero(dim);

  std::vector<Vector> basis;
  for (std::size_t i = r + 1; i <= shape.n(); ++i)
    for (std::size_t j = r + 1; j <= shape.m(); ++j) basis.push_back(unit_vector(dim, basis_index(shape, i, j)));
  return {dim, std::move(basis)};
}

std::vector<Subspace> derived_series(const DerivedAlgebra& algebra, const Subspace& v) {
  if (v.ambient_dim() != algebra.dim()) throw DimensionMismatch("subspace is not in this algebra");
  if (!is_subalgebra(algebra, v)) throw NotASubalgebra();
  std::vector<Subspace> series{v};
  while (true) {
    Subspace next = bracket_span(algebra, series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const DerivedAlgebra& algebra, const Subspace& v) { return derived_series(algebra, v).back().dim() == 0; }

Subspace radical_via_killing(const DerivedAlgebra& algebra) {
  const std::size_t dim = algebra.dim();
  const Subspace whole = Subspace::whole(dim);
  const Subspace derived = bracket_span(algebra, whole, whole);
  const RectMatrix gram = killing_form(algebra).gram;

  RectMatrix rows(derived.dim(), dim);
  for (std::size_t k = 0; k < derived.dim(); ++k) {
    const Vector row = gram.apply(derived.basis()[k]);
    for (std::size_t j = 0; j < dim; ++j) rows(k, j) = row[j];
  }
  return {dim, nullspace(rows)};
}

Subspace radical_closed_form(const SuperShape& shape, std::size_t r) {
  require_rank(shape, r, 1);
  const std::size_t dim = shape.m() * shape.n();
  std::vector<Vector> basis{scalar_pattern(shape, r)};
  for (std::size_t i = 1; i <= shape.n(); ++i)
    for (std::size_t j = 1; j <= shape.m(); ++j)
      if (i > r || j > r) basis.push_back(unit_vector(dim, basis_index(shape, i, j)));
  return {dim, std::move(basis)};
}

std::vector<RectMatrix> sl_basis(std::size_t r) {
  std::vector<RectMatrix> basis;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    RectMatrix h(r, r);
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    basis.push_back(std::move(h));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) basis.push_back(RectMatrix::unit(r, r, i, j));
  return basis;
}

Vector embed_corner(const SuperShape& shape, const RectMatrix& corner) {
  const std::size_t r = corner.rows();
  if (!corner.is_square() || r > std::min(shape.m(), shape.n()))
    throw DimensionMismatch("corner does not fit in the C block");
  Vector v(shape.m() * shape.n());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) v[basis_index(shape, i + 1, j + 1)] = corner(i, j);
  return v;
}

Subspace levi_closed_form(const SuperShape& shape, std::size_t r) {
  require_rank(shape, r, 1);
  std::vector<Vector> basis;
  for (const auto& x : sl_basis(r)) basis.push_back(embed_corner(shape, x));
  return {shape.m() * shape.n(), std::move(basis)};
}

std::vector<RectMatrix> quotient_adjoints(const DerivedAlgebra& algebra, const Subspace& complement,
                                          const Subspace& ideal) {
  const std::size_t dim = algebra.dim();
  const std::size_t k = complement.dim();
  if (k + ideal.dim() != dim) throw DimensionMismatch("complement and ideal do not split the algebra");

  // Columns: complement basis, then ideal basis. Its inverse reads off
  // coordinates in that adapted basis; the first k of them are the
  // projection along the ideal.
  RectMatrix adapted(dim, dim);
  std::size_t col = 0;
  for (const auto* part : {&complement, &ideal})
    for (const auto& v : part->basis()) {
      for (std::size_t i = 0; i < dim; ++i) adapted(i, col) = v[i];
      ++col;
    }
  const RectMatrix to_adapted = invert(adapted);

  std::vector<RectMatrix> ads(k, RectMatrix(k, k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const Vector coords = to_adapted.apply(algebra.bracket(complement.basis()[a], complement.basis()[b]));
      for (std::size_t c = 0; c < k; ++c) {
        if (coords[c].is_zero()) continue;
        ads[a](c, b) = coords[c];
        ads[b](c, a) = -coords[c];
      }
    }
  return ads;
}

namespace {

class Checklist {
public:
  explicit Checklist(std::string context) : context_(std::move(context)) {}

  void require(bool ok, const std::string& name, const std::string& detail = {}) {
    if (!ok) throw VerificationFailure(context_ + ": " + name + (detail.empty() ? "" : " (" + detail + ")"));
    passed_.push_back(name);
  }

  std::vector<std::string> take() { return std::move(passed_); }

private:
  std::string context_;
  std::vector<std::string> passed_;
};

bool sl_embedding_preserves_bracket(const DerivedAlgebra& algebra, std::size_t r) {
  const auto basis = sl_basis(r);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const RectMatrix commutator = basis[a] * basis[b] - basis[b] * basis[a];
      const Vector lhs = algebra.bracket(embed_corner(algebra.shape(), basis[a]), embed_corner(algebra.shape(), basis[b]));
      if (lhs != embed_corner(algebra.shape(), commutator)) return false;
    }
  return true;
}

}  // namespace

DecompositionReport verify_levi_decomposition(const DerivedAlgebra& algebra) {
  const SuperShape& shape = algebra.shape();
  const std::size_t r = algebra.rank_r();
  const std::size_t dim = algebra.dim();
  Checklist check("gl(" + std::to_string(shape.m()) + "|" + std::to_string(shape.n()) + ") r=" + std::to_string(r));

  const Subspace whole = Subspace::whole(dim);
  const Subspace levi = r == 0 ? Subspace::zero(dim) : levi_closed_form(shape, r);
  const Subspace radical = r == 0 ? whole : radical_closed_form(shape, r);
  const Subspace center = center_bruteforce(algebra);

  check.require(sum(levi, radical).dim() == dim, "levi_plus_radical_spans");
  check.require(intersection_dim(levi, radical) == 0, "levi_meets_radical_trivially");
  check.require(is_ideal(algebra, radical), "radical_is_ideal");

  const auto radical_series = derived_series(algebra, radical);
  check.require(radical_series.back().dim() == 0 && radical_series.size() <= 4, "radical_solvable_within_three_steps",
                "series length " + std::to_string(radical_series.size()));
  if (radical_series.size() > 2)
    check.require(radical_series[2].is_subspace_of(center), "radical_second_derived_in_center");

  check.require(is_subalgebra(algebra, levi), "levi_is_subalgebra");
  if (r >= 1) {
    std::vector<Vector> images;
    for (const auto& x : sl_basis(r)) images.push_back(embed_corner(shape, x));
    check.require(Subspace::span(dim, images).dim() == r * r - 1 && Subspace::span(dim, images).same_span(levi),
                  "levi_bijective_with_sl_r");
    check.require(sl_embedding_preserves_bracket(algebra, r), "levi_bracket_matches_sl_r");
  }
  if (r >= 2) {
    check.require(bracket_span(algebra, levi, levi).same_span(levi), "levi_is_perfect");
    const RectMatrix quotient_gram = killing_gram(quotient_adjoints(algebra, levi, radical));
    check.require(rank(quotient_gram) == levi.dim(), "quotient_killing_nondegenerate");
  }

  const Subspace radical_oracle = radical_via_killing(algebra);
  check.require(radical_oracle.same_span(radical), "radical_matches_killing_oracle",
                "oracle dim " + std::to_string(radical_oracle.dim()) + ", closed form dim " +
                    std::to_string(radical.dim()));
  check.require(center.same_span(center_closed_form(shape, r)), "center_matches_closed_form",
                "brute-force dim " + std::to_string(center.dim()));

  if (r >= 1) {
    const std::size_t expected_center =
        (r == shape.m() && r == shape.n()) ? 1 : (shape.m() - r) * (shape.n() - r);
    check.require(levi.dim() == r * r - 1 && radical_oracle.dim() == dim - r * r + 1 && center.dim() == expected_center,
                  "dimension_formulas");
  }

  DecompositionReport report{shape, r, dim, levi.dim(), radical_oracle.dim(), center.dim(),
                             algebra.is_abelian(), is_solvable(algebra, whole), {}};
  report.checks = check.take();
  return report;
}

DecompositionReport verify_levi_decomposition(const SuperShape& shape, std::size_t r) {
  require_rank(shape, r);
  return verify_levi_decomposition(build_algebra(shape, r));
}

}  // namespace dbracket
