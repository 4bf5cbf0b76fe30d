#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dbracket/derived_bracket.hpp"
#include "dbracket/matrix.hpp"
#include "dbracket/super_matrix.hpp"

namespace dbracket {

/// Parameters (m, n, r) of the algebra built from gl(m|n) with B of rank r.
struct AlgebraSpec {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t r = 0;

  /// Throws RankOutOfRange / ShapeMismatch when the triple is invalid.
  void validate() const;
  [[nodiscard]] SuperShape shape() const { return {m, n}; }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

std::string to_string(const AlgebraSpec& spec);

/// Linear map between coordinate spaces; `matrix` is target_dim x source_dim.
struct LinearMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  RectMatrix matrix;

  static LinearMap identity(std::size_t dim);
  [[nodiscard]] Vector operator()(std::span<const Rational> v) const { return matrix.apply(v); }
  [[nodiscard]] LinearMap then(const LinearMap& next) const;  // next after this
  [[nodiscard]] LinearMap inverse() const;
};

/// x -> P_n^{-1} x P_m^{-1} where (P_m, P_n) is the normal-form certificate of
/// B: an isomorphism from the algebra of B onto the rank-r normal-form algebra.
LinearMap conjugation_iso(const OddGenerator& generator);

/// F_ij -> -F'_ji from the (m|n) rank-r algebra onto the (n|m) one (c -> -c^t).
LinearMap flip_iso(const SuperShape& shape, std::size_t r);

/// True iff f is invertible and f([[u, v]]) = [[f(u), f(v)]] on all basis
/// pairs. Throws DimensionMismatch.
bool verify_homomorphism(const LinearMap& f, const DerivedAlgebra& source, const DerivedAlgebra& target);

struct Invariants {
  bool abelian = false;
  std::size_t dim = 0;
  std::size_t dim_center = 0;
  std::size_t dim_levi = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// Closed-form invariants. r = 0 gives the abelian conventions (center is
/// everything, Levi factor is zero).
Invariants invariants_of(const AlgebraSpec& spec);

enum class WitnessKind { identity, flip, coordinate_bijection, composed_conjugation };
const char* to_string(WitnessKind kind);

struct Separator {
  std::string invariant;  // "abelian", "dim", "dim_levi" or "dim_center"
  std::size_t first = 0;
  std::size_t second = 0;
};

struct ClassificationVerdict {
  bool isomorphic = false;
  std::optional<LinearMap> witness;
  std::optional<WitnessKind> witness_kind;
  std::optional<Separator> separator;
  // Set when the verdict relies on the abelian extension (some rank is zero
  // or the shape is (1|1)) rather than the rank >= 1 classification.
  bool abelian_extension = false;
};

ClassificationVerdict iso_decision(const AlgebraSpec& first, const AlgebraSpec& second);

/// Same decision for arbitrary generators; positive witnesses are composed
/// with conjugation_iso on both sides so they act on the given algebras.
ClassificationVerdict iso_decision(const OddGenerator& first, const OddGenerator& second);

/// Q X Q^{-1}: gl(m|n) -> gl(n|m), blocks (A, B; C, D) -> (D, C; B, A).
SuperMatrix flip_superalgebra(const SuperMatrix& x);

/// (A, B; C, D) -> (A^t, C^t; -B^t, D^t)
SuperMatrix supertranspose(const SuperMatrix& x);

/// X -> P X P^{-1} with P = diag(P_m, P_n^{-1}) from a normal-form certificate.
SuperMatrix conjugate_by_normal_form(const SuperMatrix& x, const NormalFormCertificate& certificate);

}  // namespace dbracket
