#include "dbracket/sweep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dbracket/classifier.hpp"
#include "dbracket/errors.hpp"
#include "dbracket/structure.hpp"

namespace dbracket {

namespace {

std::vector<SuperShape> shapes_up_to(std::size_t max_dim) {
  std::vector<SuperShape> out;
  for (std::size_t m = 1; m <= max_dim; ++m)
    for (std::size_t n = 1; n <= max_dim; ++n) out.emplace_back(m, n);
  return out;
}

std::string describe(const SuperShape& shape, std::size_t r) {
  return "gl(" + std::to_string(shape.m()) + "|" + std::to_string(shape.n()) + ") r=" + std::to_string(r);
}

std::string describe(const SuperShape& shape, const RectMatrix& b) {
  std::ostringstream os;
  os << "gl(" << shape.m() << "|" << shape.n() << ") b=" << b;
  return os.str();
}

// Records the first failure; callers stop as soon as `passed` goes false.
class Tally {
public:
  explicit Tally(std::string family) { result_.family = std::move(family); }

  template <typename Describe>
  bool expect(bool ok, Describe&& describe_failure) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe_failure();
    }
    return ok;
  }

  [[nodiscard]] bool failed() const { return !result_.passed; }
  CheckResult take() { return std::move(result_); }

private:
  CheckResult result_;
};

SuperMatrix basis_element(const SuperShape& shape, std::size_t u) {
  const BasisLabel l = basis_label(shape, u);
  return SuperMatrix::minus_one(shape, RectMatrix::unit(shape.n(), shape.m(), l.i - 1, l.j - 1));
}

Vector terms_to_vector(std::size_t dim, const Terms& terms) {
  Vector v(dim);
  for (const auto& t : terms) v[t.basis] = t.coeff;
  return v;
}

// [[F_u, sum_t c_t F_t]] accumulated into `acc`
void add_bracket_with(const DerivedAlgebra& algebra, std::size_t u, const Terms& terms, Vector& acc) {
  for (const auto& t : terms)
    for (const auto& s : algebra.bracket_basis(u, t.basis)) acc[s.basis] += t.coeff * s.coeff;
}

int parity(const SuperShape& shape, std::size_t row, std::size_t col) {
  return (row < shape.m()) != (col < shape.m()) ? 1 : 0;
}

int z_degree(const SuperShape& shape, std::size_t row, std::size_t col) {
  if ((row < shape.m()) == (col < shape.m())) return 0;
  return row < shape.m() ? 1 : -1;
}

std::string unit_name(std::size_t row, std::size_t col) {
  return "E_" + std::to_string(row + 1) + "_" + std::to_string(col + 1);
}

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  return {num(rng), den(rng)};
}

}  // namespace

RectMatrix random_rational_matrix(std::size_t rows, std::size_t cols, std::size_t max_rank, std::mt19937_64& rng) {
  RectMatrix left(rows, max_rank);
  RectMatrix right(max_rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < max_rank; ++k) left(i, k) = random_small_rational(rng);
  for (std::size_t k = 0; k < max_rank; ++k)
    for (std::size_t j = 0; j < cols; ++j) right(k, j) = random_small_rational(rng);
  return left * right;
}

std::vector<OddGenerator> random_generators(const SuperShape& shape, std::size_t count, std::mt19937_64& rng) {
  std::vector<OddGenerator> out;
  const std::size_t top = std::min(shape.m(), shape.n());
  for (std::size_t k = 0; k < count; ++k)
    out.emplace_back(shape, random_rational_matrix(shape.m(), shape.n(), k % (top + 1), rng));
  return out;
}

CheckResult check_lie_axioms(const DerivedAlgebra& algebra, const OddGenerator* generator) {
  Tally tally("lie_axioms");
  const SuperShape& shape = algebra.shape();
  const std::size_t dim = algebra.dim();
  const std::string where = describe(shape, algebra.rank_r());

  std::vector<SuperMatrix> basis;
  for (std::size_t u = 0; u < dim && generator; ++u) basis.push_back(basis_element(shape, u));

  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v) {
      const Vector table = terms_to_vector(dim, algebra.bracket_basis(u, v));
      if (u == v && !tally.expect(is_zero(table), [&] {
            return where + ": [[F_u, F_u]] != 0 for " + label_name(algebra.label(u));
          }))
        return tally.take();
      if (!generator) continue;
      const Vector forward = coordinates_of(derived_bracket_raw(basis[u], basis[v], *generator));
      const Vector backward = coordinates_of(derived_bracket_raw(basis[v], basis[u], *generator));
      if (!tally.expect(forward == -Rational(1) * backward && forward == table, [&] {
            return describe(shape, generator->b()) + ": antisymmetry fails for (" + label_name(algebra.label(u)) +
                   ", " + label_name(algebra.label(v)) + ")";
          }))
        return tally.take();
    }

  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t w = 0; w < dim; ++w) {
        Vector jacobi(dim);
        add_bracket_with(algebra, u, algebra.bracket_basis(v, w), jacobi);
        add_bracket_with(algebra, v, algebra.bracket_basis(w, u), jacobi);
        add_bracket_with(algebra, w, algebra.bracket_basis(u, v), jacobi);
        if (!tally.expect(is_zero(jacobi), [&] {
              return where + ": Jacobi identity fails for (" + label_name(algebra.label(u)) + ", " +
                     label_name(algebra.label(v)) + ", " + label_name(algebra.label(w)) + ")";
            }))
          return tally.take();
      }
  return tally.take();
}

CheckResult check_super_identities(std::size_t max_dim) {
  Tally tally("super_bracket_identities");
  for (const auto& shape : shapes_up_to(std::min<std::size_t>(max_dim, 3))) {
    const std::size_t size = shape.size();
    const bool jacobi = shape.m() <= 2 && shape.n() <= 2;
    for (std::size_t a = 0; a < size * size; ++a)
      for (std::size_t b = 0; b < size * size; ++b) {
        const std::size_t ar = a / size, ac = a % size, br = b / size, bc = b % size;
        const SuperMatrix x = SuperMatrix::unit(shape, ar, ac);
        const SuperMatrix y = SuperMatrix::unit(shape, br, bc);
        const SuperMatrix xy = super_bracket(x, y);
        const int sign = parity(shape, ar, ac) * parity(shape, br, bc) == 1 ? 1 : -1;
        auto pair_name = [&] { return describe(shape, 0) + " pair (" + unit_name(ar, ac) + ", " + unit_name(br, bc) + ")"; };
        // [x, y] = -(-1)^{|x||y|} [y, x]
        if (!tally.expect(xy == Rational(sign) * super_bracket(y, x), [&] { return pair_name() + ": graded antisymmetry"; }))
          return tally.take();

        const int degree = z_degree(shape, ar, ac) + z_degree(shape, br, bc);
        const bool graded = std::abs(degree) >= 2 ? xy.is_zero() : z_component(xy, degree) == xy;
        if (!tally.expect(graded, [&] { return pair_name() + ": bracket leaves degree " + std::to_string(degree); }))
          return tally.take();

        if (!jacobi) continue;
        const int xy_sign = parity(shape, ar, ac) * parity(shape, br, bc) == 1 ? -1 : 1;
        for (std::size_t c = 0; c < size * size; ++c) {
          const SuperMatrix z = SuperMatrix::unit(shape, c / size, c % size);
          const SuperMatrix lhs = super_bracket(x, super_bracket(y, z));
          const SuperMatrix rhs = super_bracket(xy, z) + Rational(xy_sign) * super_bracket(y, super_bracket(x, z));
          if (!tally.expect(lhs == rhs, [&] {
                return pair_name() + " with " + unit_name(c / size, c % size) + ": graded Jacobi";
              }))
            return tally.take();
        }
      }
  }
  return tally.take();
}

CheckResult check_lie_axioms_sweep(std::size_t max_dim, std::uint64_t seed, std::size_t generators_per_shape) {
  Tally tally("lie_axioms");
  std::mt19937_64 rng(seed);
  for (const auto& shape : shapes_up_to(max_dim)) {
    std::vector<OddGenerator> generators;
    for (std::size_t r = 0; r <= std::min(shape.m(), shape.n()); ++r) generators.push_back(OddGenerator::normal(shape, r));
    for (auto& g : random_generators(shape, generators_per_shape, rng)) generators.push_back(std::move(g));

    for (const auto& g : generators) {
      const CheckResult one = check_lie_axioms(build_algebra_from_general_B(g), &g);
      if (!tally.expect(one.passed, [&] { return one.counterexample; })) return tally.take();
    }
  }
  return tally.take();
}

CheckResult check_block_formula(std::size_t max_dim, std::uint64_t seed) {
  Tally tally("raw_bracket_block_formula");
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  for (const auto& shape : shapes_up_to(max_dim))
    for (int sample = 0; sample < 5; ++sample) {
      const std::size_t top = std::min(shape.m(), shape.n());
      const OddGenerator g(shape, random_rational_matrix(shape.m(), shape.n(), top, rng));
      const RectMatrix x = random_rational_matrix(shape.n(), shape.m(), top, rng);
      const RectMatrix y = random_rational_matrix(shape.n(), shape.m(), top, rng);
      const SuperMatrix raw =
          derived_bracket_raw(SuperMatrix::minus_one(shape, x), SuperMatrix::minus_one(shape, y), g);
      const RectMatrix expected = x * g.b() * y - y * g.b() * x;
      if (!tally.expect(raw == SuperMatrix::minus_one(shape, expected), [&] {
            return describe(shape, g.b()) + ": C block differs from xby - ybx";
          }))
        return tally.take();
    }
  return tally.take();
}

CheckResult check_closed_form_constants(std::size_t max_dim) {
  Tally tally("closed_form_constants");
  for (const auto& shape : shapes_up_to(max_dim))
    for (std::size_t r = 0; r <= std::min(shape.m(), shape.n()); ++r) {
      const DerivedAlgebra algebra = build_algebra(shape, r);
      const std::size_t dim = algebra.dim();
      for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t v = 0; v < dim; ++v) {
          const auto [i, j] = algebra.label(u);
          const auto [k, l] = algebra.label(v);
          Vector expected(dim);
          if (j <= r && j == k) expected[basis_index(shape, i, l)] += 1;
          if (l <= r && l == i) expected[basis_index(shape, k, j)] -= 1;
          if (!tally.expect(terms_to_vector(dim, algebra.bracket_basis(u, v)) == expected, [&] {
                return describe(shape, r) + ": closed form fails for (" + label_name(algebra.label(u)) + ", " +
                       label_name(algebra.label(v)) + ")";
              }))
            return tally.take();
        }
    }
  return tally.take();
}

CheckResult check_center_oracle(std::size_t max_dim) {
  Tally tally("center_oracle");
  for (const auto& shape : shapes_up_to(max_dim))
    for (std::size_t r = 0; r <= std::min(shape.m(), shape.n()); ++r) {
      const Subspace brute = center_bruteforce(build_algebra(shape, r));
      const Subspace closed = center_closed_form(shape, r);
      if (!tally.expect(brute.same_span(closed), [&] {
            return describe(shape, r) + ": brute-force center (dim " + std::to_string(brute.dim()) +
                   ") differs from closed form (dim " + std::to_string(closed.dim()) + ")";
          }))
        return tally.take();
    }
  return tally.take();
}

CheckResult check_radical_oracle(std::size_t max_dim) {
  Tally tally("radical_oracle");
  for (const auto& shape : shapes_up_to(max_dim))
    for (std::size_t r = 1; r <= std::min(shape.m(), shape.n()); ++r) {
      const Subspace oracle = radical_via_killing(build_algebra(shape, r));
      const Subspace closed = radical_closed_form(shape, r);
      if (!tally.expect(oracle.same_span(closed), [&] {
            return describe(shape, r) + ": Killing radical (dim " + std::to_string(oracle.dim()) +
                   ") differs from closed form (dim " + std::to_string(closed.dim()) + ")";
          }))
        return tally.take();
    }
  return tally.take();
}

CheckResult check_levi_decompositions(std::size_t max_dim) {
  Tally tally("levi_decomposition");
  for (const auto& shape : shapes_up_to(max_dim))
    for (std::size_t r = 0; r <= std::min(shape.m(), shape.n()); ++r) {
      std::string failure;
      try {
        verify_levi_decomposition(shape, r);
      } catch (const VerificationFailure& e) {
        failure = e.what();
      }
      if (!tally.expect(failure.empty(), [&] { return failure; })) return tally.take();
    }
  return tally.take();
}

CheckResult check_conjugation_isomorphisms(std::size_t max_dim, std::uint64_t seed, std::size_t generators_per_shape) {
  Tally tally("conjugation_isomorphisms");
  std::mt19937_64 rng(seed ^ 0xc0417ULL);
  for (const auto& shape : shapes_up_to(max_dim)) {
    const auto generators = random_generators(shape, generators_per_shape, rng);
    const auto partners = random_generators(shape.flipped(), generators_per_shape, rng);
    for (std::size_t k = 0; k < generators.size(); ++k) {
      const OddGenerator& g = generators[k];
      const DerivedAlgebra general = build_algebra_from_general_B(g);
      const DerivedAlgebra normal = build_algebra(shape, general.rank_r());
      if (!tally.expect(verify_homomorphism(conjugation_iso(g), general, normal), [&] {
            return describe(shape, g.b()) + ": conjugation map is not an isomorphism onto the normal form";
          }))
        return tally.take();

      // composed witness between two general generators, same or flipped shape
      const OddGenerator& h = partners[k];
      const ClassificationVerdict verdict = iso_decision(g, h);
      const bool abelian_g = rank(g.b()) == 0 || shape.m() * shape.n() == 1;
      const bool abelian_h = rank(h.b()) == 0 || shape.m() * shape.n() == 1;
      const bool expected = abelian_g || abelian_h ? abelian_g && abelian_h : rank(g.b()) == rank(h.b());
      if (!tally.expect(verdict.isomorphic == expected, [&] {
            return describe(shape, g.b()) + " vs " + describe(shape.flipped(), h.b()) + ": wrong decision";
          }))
        return tally.take();
      if (verdict.isomorphic &&
          !tally.expect(verify_homomorphism(*verdict.witness, general, build_algebra_from_general_B(h)), [&] {
            return describe(shape, g.b()) + " vs " + describe(shape.flipped(), h.b()) + ": composed witness fails";
          }))
        return tally.take();
    }
  }
  return tally.take();
}

CheckResult check_flip_isomorphisms(std::size_t max_dim) {
  Tally tally("flip_isomorphisms");
  for (const auto& shape : shapes_up_to(max_dim))
    for (std::size_t r = 0; r <= std::min(shape.m(), shape.n()); ++r) {
      const LinearMap there = flip_iso(shape, r);
      const LinearMap back = flip_iso(shape.flipped(), r);
      if (!tally.expect(verify_homomorphism(there, build_algebra(shape, r), build_algebra(shape.flipped(), r)),
                        [&] { return describe(shape, r) + ": flip map is not an isomorphism"; }))
        return tally.take();
      if (!tally.expect(there.then(back).matrix == RectMatrix::identity(there.source_dim),
                        [&] { return describe(shape, r) + ": flipping twice is not the identity"; }))
        return tally.take();
    }
  return tally.take();
}

CheckResult check_commutative_diagrams(std::size_t max_dim, std::uint64_t seed) {
  Tally tally("commutative_diagrams");
  std::mt19937_64 rng(seed ^ 0xd1a6ULL);
  for (const auto& shape : shapes_up_to(std::min<std::size_t>(max_dim, 3))) {
    const std::size_t size = shape.size();
    const LinearMap flip = flip_iso(shape, 0);

    for (const auto& g : random_generators(shape, 3, rng)) {
      const NormalFormCertificate cert = normal_form(g);
      const LinearMap conj = conjugation_iso(g);
      if (!tally.expect(conjugate_by_normal_form(g.as_super_matrix(), cert) ==
                            OddGenerator::normal(shape, cert.rank).as_super_matrix(),
                        [&] { return describe(shape, g.b()) + ": conjugation does not normalize B"; }))
        return tally.take();
      for (std::size_t a = 0; a < size * size; ++a) {
        const SuperMatrix x = SuperMatrix::unit(shape, a / size, a % size);
        if (!tally.expect(z_component(conjugate_by_normal_form(x, cert), -1) ==
                              conjugate_by_normal_form(z_component(x, -1), cert),
                          [&] { return describe(shape, g.b()) + ": pi o phi_P != phi_P o pi at " + unit_name(a / size, a % size); }))
          return tally.take();
      }
      for (std::size_t u = 0; u < shape.m() * shape.n(); ++u)
        if (!tally.expect(coordinates_of(conjugate_by_normal_form(basis_element(shape, u), cert)) == conj.matrix.column(u),
                          [&] { return describe(shape, g.b()) + ": conjugation_iso disagrees with phi_P"; }))
          return tally.take();
    }

    for (std::size_t a = 0; a < size * size; ++a) {
      const SuperMatrix x = SuperMatrix::unit(shape, a / size, a % size);
      const SuperMatrix left = z_component(supertranspose(flip_superalgebra(x)), -1);
      const SuperMatrix right = supertranspose(flip_superalgebra(z_component(x, -1)));
      if (!tally.expect(left == right, [&] {
            return describe(shape, 0) + ": pi o t o Phi_Q != (t o Phi_Q) o pi at " + unit_name(a / size, a % size);
          }))
        return tally.take();
      for (std::size_t b = 0; b < size * size; ++b) {
        const SuperMatrix y = SuperMatrix::unit(shape, b / size, b % size);
        if (!tally.expect(flip_superalgebra(super_bracket(x, y)) ==
                              super_bracket(flip_superalgebra(x), flip_superalgebra(y)),
                          [&] { return describe(shape, 0) + ": Phi_Q does not preserve the super bracket"; }))
          return tally.take();
      }
    }
    for (std::size_t u = 0; u < shape.m() * shape.n(); ++u)
      if (!tally.expect(coordinates_of(supertranspose(flip_superalgebra(basis_element(shape, u)))) == flip.matrix.column(u),
                        [&] { return describe(shape, 0) + ": flip_iso disagrees with t o Phi_Q"; }))
        return tally.take();
  }
  return tally.take();
}

CheckResult check_classification(std::size_t max_dim) {
  Tally tally("classification_soundness");

  struct Measured {
    DerivedAlgebra algebra;
    bool abelian;
    std::size_t dim;
    std::size_t dim_levi;
    std::size_t dim_center;
  };
  std::vector<AlgebraSpec> specs;
  std::vector<Measured> measured;
  for (const auto& shape : shapes_up_to(max_dim))
    for (std::size_t r = 0; r <= std::min(shape.m(), shape.n()); ++r) {
      specs.push_back({shape.m(), shape.n(), r});
      DerivedAlgebra algebra = build_algebra(shape, r);
      // brute force only: levi dimension as the complement of the Killing radical
      const std::size_t radical = radical_via_killing(algebra).dim();
      const std::size_t center = center_bruteforce(algebra).dim();
      const bool abelian = algebra.is_abelian();
      const std::size_t dim = algebra.dim();
      measured.push_back({std::move(algebra), abelian, dim, dim - radical, center});
    }

  auto brute_value = [](const Measured& x, const std::string& name) -> std::size_t {
    if (name == "abelian") return x.abelian;
    if (name == "dim") return x.dim;
    if (name == "dim_levi") return x.dim_levi;
    return x.dim_center;
  };

  for (std::size_t a = 0; a < specs.size(); ++a)
    for (std::size_t b = 0; b < specs.size(); ++b) {
      const AlgebraSpec& s = specs[a];
      const AlgebraSpec& t = specs[b];
      const ClassificationVerdict verdict = iso_decision(s, t);
      const std::string pair = to_string(s) + " vs " + to_string(t);

      const bool abelian_s = s.r == 0 || s.m * s.n == 1;
      const bool abelian_t = t.r == 0 || t.m * t.n == 1;
      const bool expected = abelian_s || abelian_t
                                ? abelian_s && abelian_t && s.m * s.n == t.m * t.n
                                : s.r == t.r && ((s.m == t.m && s.n == t.n) || (s.m == t.n && s.n == t.m));
      if (!tally.expect(verdict.isomorphic == expected, [&] { return pair + ": decision contradicts classification"; }))
        return tally.take();

      if (verdict.isomorphic) {
        const bool ok = verdict.witness && !verdict.separator &&
                        verify_homomorphism(*verdict.witness, measured[a].algebra, measured[b].algebra);
        if (!tally.expect(ok, [&] { return pair + ": witness is not a verified isomorphism"; })) return tally.take();
      } else {
        const bool ok = verdict.separator && !verdict.witness &&
                        brute_value(measured[a], verdict.separator->invariant) == verdict.separator->first &&
                        brute_value(measured[b], verdict.separator->invariant) == verdict.separator->second &&
                        verdict.separator->first != verdict.separator->second;
        if (!tally.expect(ok, [&] { return pair + ": separator not confirmed by brute force"; })) return tally.take();
      }
    }
  return tally.take();
}

CheckResult check_gl_degeneration(std::size_t max_n) {
  Tally tally("gl_degeneration");
  for (std::size_t n = 1; n <= max_n; ++n) {
    const SuperShape shape(n, n);
    const DerivedAlgebra algebra = build_algebra(shape, n);
    const Subspace levi = levi_closed_form(shape, n);
    const Subspace radical = radical_closed_form(shape, n);
    for (const auto& s : levi.basis())
      for (const auto& x : radical.basis())
        if (!tally.expect(is_zero(algebra.bracket(s, x)), [&] { return describe(shape, n) + ": S acts on R"; }))
          return tally.take();

    for (std::size_t u = 0; u < algebra.dim(); ++u)
      for (std::size_t v = 0; v < algebra.dim(); ++v) {
        const RectMatrix x = block_of(shape, unit_vector(algebra.dim(), u));
        const RectMatrix y = block_of(shape, unit_vector(algebra.dim(), v));
        const Vector commutator = coordinates_of_block(x * y - y * x);
        if (!tally.expect(terms_to_vector(algebra.dim(), algebra.bracket_basis(u, v)) == commutator, [&] {
              return describe(shape, n) + ": bracket of (" + label_name(algebra.label(u)) + ", " +
                     label_name(algebra.label(v)) + ") is not the matrix commutator";
            }))
          return tally.take();
      }
  }
  return tally.take();
}

std::vector<CheckResult> run_verification_sweep(const SweepOptions& options) {
  const std::size_t k = options.max_dim;
  return {
      check_super_identities(k),
      check_lie_axioms_sweep(k, options.seed, options.generators_per_shape),
      check_block_formula(k, options.seed),
      check_closed_form_constants(k),
      check_center_oracle(k),
      check_radical_oracle(k),
      check_levi_decompositions(k),
      check_conjugation_isomorphisms(k, options.seed, options.generators_per_shape),
      check_flip_isomorphisms(k),
      check_commutative_diagrams(k, options.seed),
      check_classification(k),
      check_gl_degeneration(k),
  };
}

}  // namespace dbracket
