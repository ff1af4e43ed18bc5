#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lta/dimnil.hpp"
#include "lta/families.hpp"
#include "lta/peirce.hpp"

namespace fx {

using namespace lta;

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

/// Gametic table G(m, 2) in its canonical basis: e0^2 = e0, e0 ei = ei/2.
inline Algebra gametic_canonical(std::size_t m) {
  TableBuilder b(m);
  b.add(0, 0, 0, 1);
  for (std::size_t i = 1; i < m; ++i) b.add(0, i, i, q(1, 2));
  return b.build();
}

/// Block-diagonal sum; the second summand's basis follows the first.
inline Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim() + b.dim();
  TableBuilder t(n);
  for (const auto& c : a.nonzero_constants()) t.add(c.i, c.j, c.k, c.value);
  for (const auto& c : b.nonzero_constants())
    t.add(a.dim() + c.i, a.dim() + c.j, a.dim() + c.k, c.value);
  return t.build();
}

/// Spin factor: unit 1, a^2 = b^2 = 1, ab = 0 (a 3-dim Jordan algebra).
inline Algebra spin_factor() {
  return TableBuilder(3, {"one", "a", "b"})
      .add(0, 0, 0, 1).add(0, 1, 1, 1).add(0, 2, 2, 1)
      .add(1, 1, 0, 1).add(2, 2, 0, 1)
      .build();
}

/// e0^2 = e0, e0 e1 = e1/3: an eigenvalue outside {0, 1/2, 1}.
inline Algebra third_eigenvalue() {
  return TableBuilder(2).add(0, 0, 0, 1).add(0, 1, 1, q(1, 3)).build();
}

/// G(3,2) canonical with e1 e1 = e1 added.
inline Algebra corrupted_gametic() {
  return TableBuilder(3).add(0, 0, 0, 1).add(0, 1, 1, q(1, 2)).add(0, 2, 2, q(1, 2)).add(1, 1, 1, 1).build();
}

/// e0^2 = e0, e0 e1 = e1, e1^2 = e0.
inline Algebra swap_square() {
  return TableBuilder(2).add(0, 0, 0, 1).add(0, 1, 1, 1).add(1, 1, 0, 1).build();
}

struct Entry {
  std::string name;
  Algebra algebra;
  std::optional<PeirceWitness> witness;
};

inline PeirceWitness witness_for(const Algebra& a, const Element& e) {
  try {
    return verify_idempotent(a, e);
  } catch (const WitnessError&) {
    return verify_pseudo_idempotent(a, e);
  }
}

inline Entry with_witness(std::string name, Algebra a, const Element& e) {
  PeirceWitness w = witness_for(a, e);
  return Entry{std::move(name), std::move(a), std::move(w)};
}

/// Lie triple algebras, most of them with a (pseudo-)idempotent witness.
inline std::vector<Entry> lie_triple_fleet(unsigned p_max = 4) {
  std::vector<Entry> fleet;
  for (const auto kind : general_family_kinds())
    for (unsigned p = 1; p <= p_max; ++p) {
      const FamilySpec spec = FamilySpec::make(kind, p);
      Algebra a = make_family(spec);
      fleet.push_back(with_witness(spec.anchor(), a, a.basis_element(0)));
    }
  for (const auto& tag : low_dim_tags()) {
    Algebra a = make_family(FamilySpec::low_dim(tag));
    fleet.push_back(with_witness("LowDim " + tag, a, a.basis_element(0)));
  }
  {
    Algebra a = pseudo_two_blocks();
    fleet.push_back(with_witness("two-blocks e", a, a.basis_element(0)));
    fleet.push_back(with_witness("two-blocks u", a, a.basis_element(2)));
  }
  {
    Algebra a = pseudo_with_v();
    fleet.push_back(with_witness("with-v e", a, a.basis_element(0)));
  }
  for (std::size_t m = 2; m <= 5; ++m) {
    Algebra a = gametic_natural(m);
    fleet.push_back(with_witness("gametic-natural " + std::to_string(m), a, a.basis_element(0)));
  }
  {
    Algebra a = direct_sum(gametic_canonical(3), Algebra(1));
    fleet.push_back(with_witness("gametic+zero", a, a.basis_element(0)));
  }
  {
    Algebra a = spin_factor();
    fleet.push_back(with_witness("spin-factor", a, vec({q(1, 2), q(1, 2), 0})));
  }
  {
    Algebra a = direct_sum(gametic_canonical(2), gametic_canonical(3));
    fleet.push_back(with_witness("gametic+gametic e0", a, a.basis_element(0)));
    fleet.push_back(with_witness("gametic+gametic sum", a, vec({1, 0, 1, 0, 0})));
  }
  {
    Algebra a = direct_sum(make_family(FamilySpec::make(FamilySpec::Kind::TrainRank3Type, 1)), spin_factor());
    fleet.push_back(with_witness("rank3+spin", a, vec({1, 0, 0, q(1, 2), 0, q(1, 2)})));
  }
  for (std::size_t m = 1; m <= 3; ++m) fleet.push_back(Entry{"zero " + std::to_string(m), Algebra(m), std::nullopt});
  return fleet;
}

/// Everything above plus algebras that fail the Lie triple identity.
inline std::vector<Entry> full_fleet(unsigned p_max = 4) {
  std::vector<Entry> fleet = lie_triple_fleet(p_max);
  fleet.push_back(Entry{"third-eigenvalue", third_eigenvalue(), std::nullopt});
  fleet.push_back(Entry{"corrupted-gametic", corrupted_gametic(), std::nullopt});
  fleet.push_back(Entry{"swap-square", swap_square(), std::nullopt});
  return fleet;
}

}  // namespace fx
