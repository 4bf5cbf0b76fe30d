#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dbracket/derived_bracket.hpp"

namespace dbracket {

/// Outcome of one family of exhaustive checks. `counterexample` names the
/// first failing case (shape, rank and the identity that broke).
struct CheckResult {
  std::string family;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

struct SweepOptions {
  std::size_t max_dim = 4;
  std::uint64_t seed = 0;
  std::size_t generators_per_shape = 20;
};

/// Random m x n rational matrix of rank at most `max_rank`, built as a
/// product of two random factors with small numerators and denominators.
RectMatrix random_rational_matrix(std::size_t rows, std::size_t cols, std::size_t max_rank, std::mt19937_64& rng);

/// Random odd generators for one shape, with ranks cycling through 0..min(m,n).
std::vector<OddGenerator> random_generators(const SuperShape& shape, std::size_t count, std::mt19937_64& rng);

/// Antisymmetry from the raw bracket (both orders) and the Jacobi identity on
/// every basis triple of the constants table.
CheckResult check_lie_axioms(const DerivedAlgebra& algebra, const OddGenerator* generator = nullptr);

CheckResult check_super_identities(std::size_t max_dim);
CheckResult check_lie_axioms_sweep(std::size_t max_dim, std::uint64_t seed, std::size_t generators_per_shape);
CheckResult check_block_formula(std::size_t max_dim, std::uint64_t seed);
CheckResult check_closed_form_constants(std::size_t max_dim);
CheckResult check_center_oracle(std::size_t max_dim);
CheckResult check_radical_oracle(std::size_t max_dim);
CheckResult check_levi_decompositions(std::size_t max_dim);
CheckResult check_conjugation_isomorphisms(std::size_t max_dim, std::uint64_t seed, std::size_t generators_per_shape);
CheckResult check_flip_isomorphisms(std::size_t max_dim);
CheckResult check_commutative_diagrams(std::size_t max_dim, std::uint64_t seed);
CheckResult check_classification(std::size_t max_dim);
CheckResult check_gl_degeneration(std::size_t max_n);

/// Every family above, in a fixed order.
std::vector<CheckResult> run_verification_sweep(const SweepOptions& options);

}  // namespace dbracket
