#include <doctest.h>

#include "fixtures.hpp"
#include <functional>

#include "lta/derivations.hpp"

using namespace lta;
using fx::q;
using fx::vec;
using Kind = FamilySpec::Kind;

namespace {

Subspace span_of(std::size_t n, std::vector<Vector> vs) { return Subspace::span(n, std::move(vs)); }

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("idempotent and pseudo-idempotent verification") {
  const Algebra g = gametic_natural(2);
  CHECK(verify_idempotent(g, g.basis_element(0)).e == g.basis_element(0));
  CHECK(error_kind([&] { verify_idempotent(g, vec({0, 0})); }) == "ZeroElement");
  CHECK(error_kind([&] { verify_idempotent(g, vec({1, 1})); }) == "NotIdempotent");

  const Algebra ps = make_family(FamilySpec::make(Kind::OddPseudo, 1));
  try {
    verify_idempotent(ps, ps.basis_element(0));
    FAIL("expected NotIdempotent");
  } catch (const WitnessError& e) {
    CHECK(e.kind() == "NotIdempotent");
    CHECK(e.residual() == ps.basis_element(3));
  }
  const PseudoIdempotentWitness w = verify_pseudo_idempotent(ps, ps.basis_element(0));
  CHECK(w.t == ps.basis_element(3));

  const Algebra tb = pseudo_two_blocks();
  CHECK(verify_pseudo_idempotent(tb, tb.basis_element(0)).t == tb.basis_element(1));
  CHECK(verify_pseudo_idempotent(tb, tb.basis_element(2)).t == tb.basis_element(3));
  CHECK(error_kind([&] { verify_pseudo_idempotent(g, g.basis_element(0)); }) == "TIsZero");
  CHECK(error_kind([&] { verify_pseudo_idempotent(tb, tb.basis_element(1)); }) == "HalfConditionFails");
  CHECK(error_kind([&] { verify_pseudo_idempotent(tb, vec({0, 0, 0, 0})); }) == "ZeroElement");
}

TEST_CASE("Peirce components of the two-block pseudo-idempotent example") {
  const Algebra a = pseudo_two_blocks();
  const PeirceDecomposition pd = peirce_decompose(a, a.basis_element(0));
  CHECK(pd.comp1 == span_of(4, {vec({1, 2, 0, 0})}));
  CHECK(pd.compHalf == span_of(4, {vec({0, 1, 0, 0})}));
  CHECK(pd.comp0 == span_of(4, {vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
  CHECK(pd.project(PeirceEigen::One, a.basis_element(0)) == vec({1, 2, 0, 0}));
  CHECK(pd.project(PeirceEigen::Half, a.basis_element(0)) == vec({0, -2, 0, 0}));
}

TEST_CASE("Peirce components of further examples") {
  const Algebra v = pseudo_with_v();
  const PeirceDecomposition pv = peirce_decompose(v, v.basis_element(0));
  CHECK(pv.comp1 == span_of(4, {vec({1, 2, 0, 0}), vec({0, 0, 0, 1})}));
  CHECK(pv.compHalf == span_of(4, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0})}));
  CHECK(pv.comp0.is_zero());

  const Algebra g = fx::gametic_canonical(4);
  const PeirceDecomposition pg = peirce_decompose(g, g.basis_element(0));
  CHECK(pg.comp1 == span_of(4, {g.basis_element(0)}));
  CHECK(pg.compHalf.dim() == 3);
  CHECK(pg.comp0.is_zero());

  CHECK(error_kind([] { peirce_decompose(fx::third_eigenvalue(), vec({1, 0})); }) == "NotDecomposable");
}

TEST_CASE("Peirce relations") {
  for (const auto& entry : fx::lie_triple_fleet()) {
    if (!entry.witness) continue;
    CAPTURE(entry.name);
    const PeirceRelationReport r = verify_peirce_relations(entry.algebra, *entry.witness);
    CHECK(r.pseudo == std::holds_alternative<PseudoIdempotentWitness>(*entry.witness));
    for (const auto& c : r.checks) {
      CAPTURE(c.item + " " + c.description);
      CHECK(c.passed);
    }
    CHECK(r.checks.size() >= (r.pseudo ? 10u : 7u));
  }
  const Algebra bad = fx::corrupted_gametic();
  const PeirceRelationReport r = verify_peirce_relations(bad, verify_idempotent(bad, bad.basis_element(0)));
  CHECK_FALSE(r.item_passed("(i)"));
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("ideals attached to an idempotent") {
  for (unsigned p = 1; p <= 3; ++p) {
    const Algebra g = make_family(FamilySpec::make(Kind::OddGametic, p));
    const JIdeals js = j_ideals(g, verify_idempotent(g, g.basis_element(0)));
    CHECK(js.j.is_zero());
  }
  const Algebra gz = fx::direct_sum(fx::gametic_canonical(3), Algebra(1));
  const JIdeals js = j_ideals(gz, verify_idempotent(gz, gz.basis_element(0)));
  CHECK(js.j1.is_zero());
  CHECK(js.j0.subspace() == span_of(4, {gz.basis_element(3)}));
  CHECK(js.j == js.j0);

  // No A(1/2) at all: nothing to annihilate.
  const Algebra sum2 = fx::direct_sum(gametic_natural(1), Algebra(1));
  const JIdeals all = j_ideals(sum2, verify_idempotent(sum2, sum2.basis_element(0)));
  CHECK(all.j.subspace() == Subspace::full(2));
}

TEST_CASE("half ideal attached to a pseudo-idempotent") {
  const Algebra a = pseudo_two_blocks();
  const HalfIdeal h = j_half_ideal(a, verify_pseudo_idempotent(a, a.basis_element(0)));
  CHECK(h.ideal.subspace() == span_of(4, {a.basis_element(1)}));
  CHECK(h.quotient.algebra.dim() == 3);
  CHECK(mul(h.quotient.algebra, h.e_bar, h.e_bar) == h.e_bar);

  for (unsigned p = 1; p <= 4; ++p) {
    const Algebra ps = make_family(FamilySpec::make(Kind::OddPseudo, p));
    const PseudoIdempotentWitness w = verify_pseudo_idempotent(ps, ps.basis_element(0));
    const HalfIdeal hp = j_half_ideal(ps, w);
    CAPTURE(p);
    CHECK(hp.ideal.subspace().contains(w.t));
    CHECK(hp.quotient.algebra.dim() == ps.dim() - hp.ideal.dim());
    // A(1/2) = span{e1..en} squares to zero, so the annihilator is all of it.
    std::vector<Vector> tail;
    for (std::size_t i = 1; i < ps.dim(); ++i) tail.push_back(ps.basis_element(i));
    CHECK(hp.ideal.subspace() == span_of(ps.dim(), tail));
    CHECK(hp.quotient.algebra == fx::gametic_canonical(1));
  }
}

TEST_CASE("property: components are eigenspaces that split the space") {
  for (const auto& entry : fx::lie_triple_fleet()) {
    if (!entry.witness) continue;
    CAPTURE(entry.name);
    const Algebra& a = entry.algebra;
    const Element& e = witness_element(*entry.witness);
    const PeirceDecomposition pd = peirce_decompose(a, e);
    const std::size_t n = a.dim();
    CHECK(pd.comp1.dim() + pd.compHalf.dim() + pd.comp0.dim() == n);
    CHECK(sum(sum(pd.comp1, pd.compHalf), pd.comp0) == Subspace::full(n));
    const std::pair<PeirceEigen, Rational> eigs[] = {
        {PeirceEigen::One, 1}, {PeirceEigen::Half, q(1, 2)}, {PeirceEigen::Zero, 0}};
    Matrix total(n, n);
    for (const auto& [eig, lambda] : eigs) {
      for (const auto& v : pd.component(eig).basis_vectors()) CHECK(mul(a, e, v) == lambda * v);
      total = total + pd.projection(eig);
      CHECK(pd.projection(eig) * pd.projection(eig) == pd.projection(eig));
    }
    CHECK(total == Matrix::identity(n));
    if (const auto* pw = std::get_if<PseudoIdempotentWitness>(&*entry.witness)) {
      CHECK(pd.compHalf.contains(pw->t));
      CHECK(associator_ideal(a).subspace().contains(pw->t));
    }
  }
}

TEST_CASE("property: the attached ideals are characteristic") {
  for (const auto& entry : fx::lie_triple_fleet(3)) {
    if (!entry.witness) continue;
    CAPTURE(entry.name);
    const DerivationSpace ders = derivation_space(entry.algebra);
    if (const auto* iw = std::get_if<IdempotentWitness>(&*entry.witness)) {
      const JIdeals js = j_ideals(entry.algebra, *iw);
      CHECK(is_characteristic(ders, js.j));
    } else {
      const auto& pw = std::get<PseudoIdempotentWitness>(*entry.witness);
      CHECK(is_characteristic(ders, j_half_ideal(entry.algebra, pw).ideal));
    }
  }
}

TEST_CASE("half annihilator vanishes when A(1/2) pairs nondegenerately") {
  for (unsigned p = 1; p <= 3; ++p) {
    const Algebra a = make_family(FamilySpec::make(Kind::BernsteinNormal, p));
    const PeirceDecomposition pd = peirce_decompose(a, a.basis_element(0));
    CAPTURE(p);
    CHECK(pd.comp0 == span_of(a.dim(), {a.basis_element(a.dim() - 1)}));
    CHECK(half_annihilator(a, pd).is_zero());
  }
}

TEST_CASE("property: the quotient by J is a Jordan algebra") {
  for (const auto& entry : fx::lie_triple_fleet()) {
    if (!entry.witness) continue;
    const auto* iw = std::get_if<IdempotentWitness>(&*entry.witness);
    if (!iw) continue;
    CAPTURE(entry.name);
    const JIdeals js = j_ideals(entry.algebra, *iw);
    CHECK(check_jordan(quotient(entry.algebra, js.j).algebra).holds);
  }
}
