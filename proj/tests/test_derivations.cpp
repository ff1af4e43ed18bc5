#include <doctest.h>

#include "fixtures.hpp"
#include "lta/derivations.hpp"
#include "random.hpp"

using namespace lta;
using fx::q;
using fx::vec;
using Kind = FamilySpec::Kind;

namespace {

Matrix from_columns(const std::vector<Vector>& cols) {
  const std::size_t n = cols.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace

TEST_CASE("derivation space dimensions") {
  CHECK(derivation_space(pseudo_two_blocks()).dim() == 2);
  CHECK(derivation_space(pseudo_with_v()).dim() == 3);
  for (std::size_t m = 1; m <= 4; ++m) CHECK(derivation_space(Algebra(m)).dim() == m * m);
  CHECK(derivation_space(fx::spin_factor()).dim() == 1);
}

TEST_CASE("Leibniz validation") {
  const Algebra g = fx::gametic_canonical(4);
  CHECK(satisfies_leibniz(g, shift_matrix(4)));
  CHECK_FALSE(satisfies_leibniz(g, Matrix::identity(4)));
  try {
    DerivationMatrix::make(g, Matrix::identity(4));
    FAIL("expected NotADerivation");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotADerivation");
  }
  CHECK_THROWS_AS(DerivationMatrix::make(g, Matrix::identity(3)), Error);
  const DerivationMatrix d = DerivationMatrix::make(g, shift_matrix(4));
  CHECK(d(g.basis_element(0)) == g.basis_element(1));
  CHECK(d(g.basis_element(3)) == vec({0, 0, 0, 0}));
}

TEST_CASE("vectorize is row-major and invertible") {
  Matrix m(2, 2);
  m(0, 1) = 5;
  m(1, 0) = q(-1, 3);
  CHECK(vectorize(m) == vec({0, 5, q(-1, 3), 0}));
  CHECK(unvectorize(vectorize(m), 2) == m);
}

TEST_CASE("quadruplet of the two-block example") {
  const Algebra a = pseudo_two_blocks();
  const PeirceWitness w = verify_pseudo_idempotent(a, a.basis_element(0));
  const Vector t = a.basis_element(1), zero = vec({0, 0, 0, 0});
  const DerivationMatrix d = DerivationMatrix::make(a, from_columns({t, zero, zero, zero}));
  const DerivationQuadruplet quad = quadruplet_decompose(a, w, d);
  CHECK(quad.de == t);
  CHECK(quad.h.rows() == 1);
  CHECK(quad.f.rows() == 1);
  CHECK(quad.g.rows() == 2);
  CHECK(quad.h.is_zero());
  CHECK(quad.f.is_zero());
  CHECK(quad.g.is_zero());
  CHECK(quadruplet_reconstruct(a, w, quad) == d);

  const DerivationMatrix zero_d = DerivationMatrix::make(a, Matrix(4, 4));
  const DerivationQuadruplet zq = quadruplet_decompose(a, w, zero_d);
  CHECK(is_zero(zq.de));
  CHECK((zq.f.is_zero() && zq.g.is_zero() && zq.h.is_zero()));
  CHECK(quadruplet_reconstruct(a, w, zq) == zero_d);
}

TEST_CASE("quadruplet of the example with v") {
  const Algebra a = pseudo_with_v();
  const PeirceWitness w = verify_pseudo_idempotent(a, a.basis_element(0));
  const Vector zero = vec({0, 0, 0, 0});
  // e -> t1, v -> 2 t2.
  const DerivationMatrix d =
      DerivationMatrix::make(a, from_columns({a.basis_element(1), zero, zero, vec({0, 0, 2, 0})}));
  const DerivationQuadruplet quad = quadruplet_decompose(a, w, d);
  CHECK(quad.de == a.basis_element(1));
  CHECK(quad.f.rows() == 2);
  CHECK(quad.h.rows() == 2);
  CHECK(quad.f.is_zero());
  CHECK(quad.h.is_zero());
  CHECK(quadruplet_reconstruct(a, w, quad) == d);
  CHECK(check_dt_zero(a, std::get<PseudoIdempotentWitness>(w), d));
}

TEST_CASE("a quadruplet outside the conditions does not reconstruct") {
  const Algebra a = pseudo_two_blocks();
  const PeirceWitness w = verify_pseudo_idempotent(a, a.basis_element(0));
  DerivationQuadruplet quad{vec({0, 0, 0, 0}), Matrix(1, 1), Matrix(2, 2), Matrix(1, 1)};
  quad.f(0, 0) = 1;
  CHECK_THROWS_AS(quadruplet_reconstruct(a, w, quad), Error);
  CHECK(ConditionViolated::roman(4) == "iv");
  CHECK(ConditionViolated::roman(10) == "x");
}

TEST_CASE("d-invariance and characteristic ideals") {
  const Algebra g = fx::gametic_canonical(4);
  const DerivationMatrix shift = DerivationMatrix::make(g, shift_matrix(4));
  CHECK_FALSE(is_d_invariant(Subspace::span(4, {g.basis_element(1)}), shift));
  CHECK(is_d_invariant(Ideal::make(g, Subspace::span(4, {g.basis_element(3)})), shift));
  CHECK(is_d_invariant(Ideal::zero(g), shift));

  const Algebra z = Algebra(2);
  CHECK_FALSE(is_characteristic(z, Ideal::make(z, Subspace::span(2, {z.basis_element(0)}))));
  CHECK(is_characteristic(z, Ideal::zero(z)));

  const Algebra a = pseudo_two_blocks();
  const HalfIdeal h = j_half_ideal(a, verify_pseudo_idempotent(a, a.basis_element(0)));
  CHECK(is_characteristic(a, h.ideal));
  CHECK(is_characteristic(a, associator_ideal(a)));
}

TEST_CASE("property: derivation spaces are Lie algebras of Leibniz maps") {
  fx::RandomRationals rnd(31);
  for (const auto& entry : fx::full_fleet(3)) {
    CAPTURE(entry.name);
    const DerivationSpace space = derivation_space(entry.algebra);
    CHECK(space.is_lie_closed());
    CHECK(space.flattened().dim() == space.dim());
    for (const auto& d : space.basis()) CHECK(satisfies_leibniz(entry.algebra, d.matrix()));
    if (space.dim() == 0) continue;
    Matrix combo(entry.algebra.dim(), entry.algebra.dim());
    for (const auto& d : space.basis()) combo = combo + rnd.next(3) * d.matrix();
    CHECK(satisfies_leibniz(entry.algebra, combo));
    CHECK(space.contains(combo));
  }
}

TEST_CASE("property: quadruplet round trip and d(t) = 0") {
  for (const auto& entry : fx::lie_triple_fleet()) {
    if (!entry.witness) continue;
    CAPTURE(entry.name);
    const Algebra& a = entry.algebra;
    const DerivationSpace space = derivation_space(a);
    const PeirceDecomposition pd = peirce_decompose(a, witness_element(*entry.witness));
    for (const auto& d : space.basis()) {
      const DerivationQuadruplet quad = quadruplet_decompose(a, *entry.witness, d);
      CHECK(pd.compHalf.contains(quad.de));
      CHECK(quadruplet_reconstruct(a, *entry.witness, quad) == d);
      if (const auto* pw = std::get_if<PseudoIdempotentWitness>(&*entry.witness))
        CHECK(check_dt_zero(a, *pw, d));
    }
  }
}
