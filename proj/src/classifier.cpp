#include "dbracket/classifier.hpp"

#include <algorithm>
#include <utility>

#include "dbracket/errors.hpp"

namespace dbracket {

void AlgebraSpec::validate() const {
  if (m == 0 || n == 0) throw ShapeMismatch("m and n must be at least 1");
  if (r > std::min(m, n)) throw RankOutOfRange("rank " + std::to_string(r) + " exceeds min(m, n)");
}

std::string to_string(const AlgebraSpec& spec) {
  return "gl(" + std::to_string(spec.m) + "|" + std::to_string(spec.n) + ") r=" + std::to_string(spec.r);
}

LinearMap LinearMap::identity(std::size_t dim) { return {dim, dim, RectMatrix::identity(dim)}; }

LinearMap LinearMap::then(const LinearMap& next) const {
  if (next.source_dim != target_dim) throw DimensionMismatch("cannot compose maps with mismatched dimensions");
  return {source_dim, next.target_dim, next.matrix * matrix};
}

LinearMap LinearMap::inverse() const { return {target_dim, source_dim, invert(matrix)}; }

LinearMap conjugation_iso(const OddGenerator& generator) {
  const SuperShape& shape = generator.shape();
  const NormalFormCertificate cert = normal_form(generator);
  const RectMatrix pn_inv = invert(cert.p_n);
  const RectMatrix pm_inv = invert(cert.p_m);

  const std::size_t dim = shape.m() * shape.n();
  RectMatrix matrix(dim, dim);
  for (std::size_t u = 0; u < dim; ++u) {
    const BasisLabel l = basis_label(shape, u);
    const RectMatrix image = pn_inv * RectMatrix::unit(shape.n(), shape.m(), l.i - 1, l.j - 1) * pm_inv;
    const Vector coords = coordinates_of_block(image);
    for (std::size_t w = 0; w < dim; ++w) matrix(w, u) = coords[w];
  }
  return {dim, dim, std::move(matrix)};
}

LinearMap flip_iso(const SuperShape& shape, std::size_t r) {
  if (r > std::min(shape.m(), shape.n())) throw RankOutOfRange("rank " + std::to_string(r) + " exceeds min(m, n)");
  const SuperShape target = shape.flipped();
  const std::size_t dim = shape.m() * shape.n();
  RectMatrix matrix(dim, dim);
  for (std::size_t u = 0; u < dim; ++u) {
    const BasisLabel l = basis_label(shape, u);
    matrix(basis_index(target, l.j, l.i), u) = -1;
  }
  return {dim, dim, std::move(matrix)};
}

bool verify_homomorphism(const LinearMap& f, const DerivedAlgebra& source, const DerivedAlgebra& target) {
  if (f.source_dim != source.dim() || f.target_dim != target.dim() || f.matrix.rows() != f.target_dim ||
      f.matrix.cols() != f.source_dim)
    throw DimensionMismatch("map dimensions do not match the algebras");
  if (f.source_dim != f.target_dim || rank(f.matrix) != f.source_dim) return false;

  std::vector<Vector> images;
  images.reserve(source.dim());
  for (std::size_t u = 0; u < source.dim(); ++u) images.push_back(f.matrix.column(u));

  for (std::size_t u = 0; u < source.dim(); ++u)
    for (std::size_t v = u + 1; v < source.dim(); ++v) {
      Vector lhs(target.dim());
      for (const auto& t : source.bracket_basis(u, v))
        for (std::size_t w = 0; w < target.dim(); ++w) add_product(lhs[w], t.coeff, images[t.basis][w]);
      if (lhs != target.bracket(images[u], images[v])) return false;
    }
  return true;
}

Invariants invariants_of(const AlgebraSpec& spec) {
  spec.validate();
  const std::size_t dim = spec.m * spec.n;
  if (spec.r == 0 || dim == 1) return {true, dim, dim, 0};
  const std::size_t r = spec.r;
  const std::size_t center = (r == spec.m && r == spec.n) ? 1 : (spec.m - r) * (spec.n - r);
  return {false, dim, center, r * r - 1};
}

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::identity: return "identity";
    case WitnessKind::flip: return "flip";
    case WitnessKind::coordinate_bijection: return "coordinate bijection";
    case WitnessKind::composed_conjugation: return "composed conjugation";
  }
  return "?";
}

ClassificationVerdict iso_decision(const AlgebraSpec& first, const AlgebraSpec& second) {
  const Invariants a = invariants_of(first);
  const Invariants b = invariants_of(second);

  ClassificationVerdict verdict;
  verdict.abelian_extension = a.abelian || b.abelian;

  auto separate = [&](std::string name, std::size_t x, std::size_t y) {
    verdict.separator = Separator{std::move(name), x, y};
    return verdict;
  };

  // Two abelian algebras are isomorphic exactly when their dimensions agree.
  if (a.abelian != b.abelian) return separate("abelian", a.abelian, b.abelian);
  if (a.abelian) {
    if (a.dim != b.dim) return separate("dim", a.dim, b.dim);
    verdict.isomorphic = true;
    verdict.witness = LinearMap::identity(a.dim);
    verdict.witness_kind = WitnessKind::coordinate_bijection;
    return verdict;
  }

  const bool same_order = first.m == second.m && first.n == second.n;
  const bool swapped = first.m == second.n && first.n == second.m;
  if (first.r == second.r && (same_order || swapped)) {
    verdict.isomorphic = true;
    if (same_order) {
      verdict.witness = LinearMap::identity(a.dim);
      verdict.witness_kind = WitnessKind::identity;
    } else {
      verdict.witness = flip_iso(first.shape(), first.r);
      verdict.witness_kind = WitnessKind::flip;
    }
    return verdict;
  }

  if (a.dim != b.dim) return separate("dim", a.dim, b.dim);
  if (a.dim_levi != b.dim_levi) return separate("dim_levi", a.dim_levi, b.dim_levi);
  if (a.dim_center != b.dim_center) return separate("dim_center", a.dim_center, b.dim_center);
  throw VerificationFailure("no separating invariant between " + to_string(first) + " and " + to_string(second));
}

ClassificationVerdict iso_decision(const OddGenerator& first, const OddGenerator& second) {
  const AlgebraSpec a{first.shape().m(), first.shape().n(), rank(first.b())};
  const AlgebraSpec b{second.shape().m(), second.shape().n(), rank(second.b())};
  ClassificationVerdict verdict = iso_decision(a, b);
  if (verdict.isomorphic) {
    verdict.witness = conjugation_iso(first).then(*verdict.witness).then(conjugation_iso(second).inverse());
    verdict.witness_kind = WitnessKind::composed_conjugation;
  }
  return verdict;
}

SuperMatrix flip_superalgebra(const SuperMatrix& x) {
  return {x.shape().flipped(), x.d(), x.c(), x.b(), x.a()};
}

SuperMatrix supertranspose(const SuperMatrix& x) {
  return {x.shape(), x.a().transpose(), x.c().transpose(), -x.b().transpose(), x.d().transpose()};
}

SuperMatrix conjugate_by_normal_form(const SuperMatrix& x, const NormalFormCertificate& certificate) {
  const RectMatrix& pm = certificate.p_m;
  const RectMatrix& pn = certificate.p_n;
  const RectMatrix pm_inv = invert(pm);
  const RectMatrix pn_inv = invert(pn);
  return {x.shape(), pm * x.a() * pm_inv, pm * x.b() * pn, pn_inv * x.c() * pm_inv, pn_inv * x.d() * pn};
}

}  // namespace dbracket
