#include "dbracket/derived_bracket.hpp"

#include <algorithm>

#include "dbracket/errors.hpp"

namespace dbracket {

OddGenerator::OddGenerator(SuperShape shape, RectMatrix b) : shape_(shape), b_(std::move(b)) {
  if (b_.rows() != shape.m() || b_.cols() != shape.n()) throw ShapeMismatch("odd generator block must be m x n");
}

OddGenerator OddGenerator::normal(SuperShape shape, std::size_t r) {
  if (r > std::min(shape.m(), shape.n()))
    throw RankOutOfRange("rank " + std::to_string(r) + " exceeds min(m, n)");
  return {shape, RectMatrix::rank_pattern(shape.m(), shape.n(), r)};
}

NormalFormCertificate normal_form(const OddGenerator& generator) {
  auto [left, right, r] = rank_normal_transforms(generator.b());
  RectMatrix b_normal = left * generator.b() * right;
  return {std::move(left), std::move(right), std::move(b_normal), r};
}

SuperMatrix derived_bracket_raw(const SuperMatrix& x, const SuperMatrix& y, const OddGenerator& generator) {
  if (!(x.shape() == generator.shape()) || !(y.shape() == generator.shape()))
    throw ShapeMismatch("derived bracket arguments differ in shape from the generator");
  for (const auto* arg : {&x, &y}) {
    const Grade g = grade_of(*arg);
    if (!g.is_zero && g.tag != GradeTag::minus_one) throw NotDegreeMinusOne();
  }
  return super_bracket(x, super_bracket(generator.as_super_matrix(), y));
}

std::size_t basis_index(const SuperShape& shape, std::size_t i, std::size_t j) {
  if (i < 1 || i > shape.n() || j < 1 || j > shape.m()) throw DimensionMismatch("basis label out of range");
  return (i - 1) * shape.m() + (j - 1);
}

BasisLabel basis_label(const SuperShape& shape, std::size_t index) {
  if (index >= shape.m() * shape.n()) throw DimensionMismatch("basis index out of range");
  return {index / shape.m() + 1, index % shape.m() + 1};
}

std::string label_name(const BasisLabel& label) {
  return "F_" + std::to_string(label.i) + "_" + std::to_string(label.j);
}

Vector coordinates_of_block(const RectMatrix& c) { return c.entries(); }

Vector coordinates_of(const SuperMatrix& x) { return coordinates_of_block(x.c()); }

RectMatrix block_of(const SuperShape& shape, std::span<const Rational> coords) {
  if (coords.size() != shape.m() * shape.n()) throw DimensionMismatch("coordinate vector length differs from m*n");
  return {shape.n(), shape.m(), Vector(coords.begin(), coords.end())};
}

SuperMatrix element_of(const SuperShape& shape, std::span<const Rational> coords) {
  return SuperMatrix::minus_one(shape, block_of(shape, coords));
}

Terms to_terms(std::span<const Rational> v) {
  Terms out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({k, v[k]});
  return out;
}

DerivedAlgebra::DerivedAlgebra(SuperShape shape, std::size_t rank_r, Constants constants)
    : shape_(shape), rank_r_(rank_r), constants_(std::move(constants)) {
  if (rank_r_ > std::min(shape.m(), shape.n()))
    throw RankOutOfRange("rank " + std::to_string(rank_r_) + " exceeds min(m, n)");
  for (auto it = constants_.begin(); it != constants_.end();) {
    const auto [u, v] = it->first;
    if (u >= v || v >= dim()) throw DimensionMismatch("structure constant key must satisfy u < v < dim");
    for (const auto& t : it->second)
      if (t.basis >= dim()) throw DimensionMismatch("structure constant term outside the basis");
    std::erase_if(it->second, [](const Term& t) { return t.coeff.is_zero(); });
    std::sort(it->second.begin(), it->second.end(), [](const Term& a, const Term& b) { return a.basis < b.basis; });
    it = it->second.empty() ? constants_.erase(it) : std::next(it);
  }
}

std::vector<BasisLabel> DerivedAlgebra::basis_labels() const {
  std::vector<BasisLabel> labels;
  labels.reserve(dim());
  for (std::size_t u = 0; u < dim(); ++u) labels.push_back(label(u));
  return labels;
}

Terms DerivedAlgebra::bracket_basis(std::size_t u, std::size_t v) const {
  if (u == v) return {};
  const bool swapped = u > v;
  const auto it = constants_.find(swapped ? std::pair{v, u} : std::pair{u, v});
  if (it == constants_.end()) return {};
  Terms out = it->second;
  if (swapped)
    for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

Vector DerivedAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("coordinate vector length differs from dim");
  Vector out(dim());
  for (const auto& [key, terms] : constants_) {
    const auto [u, v] = key;
    // x_u y_v - x_v y_u multiplies [[F_u, F_v]]
    Rational w = x[u] * y[v] - x[v] * y[u];
    if (w.is_zero()) continue;
    for (const auto& t : terms) out[t.basis] += w * t.coeff;
  }
  return out;
}

RectMatrix DerivedAlgebra::adjoint(std::size_t u) const {
  RectMatrix ad(dim(), dim());
  for (std::size_t v = 0; v < dim(); ++v)
    for (const auto& t : bracket_basis(u, v)) ad(t.basis, v) = t.coeff;
  return ad;
}

Vector bracket_coords(const DerivedAlgebra& algebra, std::span<const Rational> u, std::span<const Rational> v) {
  return algebra.bracket(u, v);
}

DerivedAlgebra build_algebra_from_general_B(const OddGenerator& generator) {
  const SuperShape& shape = generator.shape();
  const std::size_t dim = shape.m() * shape.n();

  std::vector<SuperMatrix> basis;
  basis.reserve(dim);
  for (std::size_t u = 0; u < dim; ++u) {
    const BasisLabel l = basis_label(shape, u);
    basis.push_back(SuperMatrix::minus_one(shape, RectMatrix::unit(shape.n(), shape.m(), l.i - 1, l.j - 1)));
  }

  DerivedAlgebra::Constants constants;
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = u + 1; v < dim; ++v) {
      Terms terms = to_terms(coordinates_of(derived_bracket_raw(basis[u], basis[v], generator)));
      if (!terms.empty()) constants.emplace(std::pair{u, v}, std::move(terms));
    }
  return {shape, rank(generator.b()), std::move(constants)};
}

DerivedAlgebra build_algebra(SuperShape shape, std::size_t r) {
  return build_algebra_from_general_B(OddGenerator::normal(shape, r));
}

}  // namespace dbracket
