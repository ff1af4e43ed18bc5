#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lta/algebra.hpp"
#include "lta/error.hpp"

namespace lta {

/// Raised by the witness verifiers; `residual()` carries e^2 - e for
/// NotIdempotent and is empty otherwise.
class WitnessError : public Error {
 public:
  WitnessError(std::string kind, const std::string& message, Element residual = {})
      : Error(std::move(kind), message), residual_(std::move(residual)) {}
  const Element& residual() const { return residual_; }

 private:
  Element residual_;
};

/// Nonzero e with e^2 = e.
struct IdempotentWitness {
  Element e;
};

/// Nonzero e with e^2 = e + t, e t = t/2, t^2 = 0, t nonzero in the
/// associator ideal.
struct PseudoIdempotentWitness {
  Element e;
  Element t;
};

using PeirceWitness = std::variant<IdempotentWitness, PseudoIdempotentWitness>;

const Element& witness_element(const PeirceWitness& w);

/// Errors: ZeroElement, NotIdempotent (residual e^2 - e).
IdempotentWitness verify_idempotent(const Algebra& a, const Element& e);

/// Errors: ZeroElement, TIsZero, HalfConditionFails, TSquaredNonzero, TNotInL.
PseudoIdempotentWitness verify_pseudo_idempotent(const Algebra& a, const Element& e);

enum class PeirceEigen { One, Half, Zero };

const char* to_string(PeirceEigen eig);

/// A = A_e(1) + A_e(1/2) + A_e(0) as exact eigenspaces of L_e.
struct PeirceDecomposition {
  Subspace comp1;
  Subspace compHalf;
  Subspace comp0;
  /// Columns are the RREF basis vectors of comp1, then compHalf, then comp0.
  Matrix change;
  /// Projections onto each component along the other two.
  Matrix proj1;
  Matrix projHalf;
  Matrix proj0;

  const Subspace& component(PeirceEigen eig) const;
  const Matrix& projection(PeirceEigen eig) const;
  Vector project(PeirceEigen eig, const Vector& v) const { return projection(eig).apply(v); }
};

/// Throws Error("NotDecomposable") when the eigenspaces for 1, 1/2, 0 do not
/// fill the whole space.
PeirceDecomposition peirce_decompose(const Algebra& a, const Element& e);

struct RelationCheck {
  std::string item;         // "(i)", "(ii)", ...
  std::string description;  // the relation in words
  bool passed = false;
};

struct PeirceRelationReport {
  bool pseudo = false;
  std::vector<RelationCheck> checks;

  bool all_passed() const;
  /// True iff every check tagged `item` passed.
  bool item_passed(const std::string& item) const;
};

/// Audits the Peirce multiplication rules for an idempotent (items
/// (i)-(vii)) or a pseudo-idempotent (items (i)-(x)). For the
/// pseudo-idempotent case the associator ideal L is graded by
/// L_e(lambda) = L intersected with A_e(lambda).
PeirceRelationReport verify_peirce_relations(const Algebra& a, const PeirceWitness& w);

/// {x in A_e(1/2) : x A_e(1/2) = 0}.
Subspace half_annihilator(const Algebra& a, const PeirceDecomposition& pd);

struct JIdeals {
  Ideal j1;  // {x in A_e(1) : x A_e(1/2) = 0}
  Ideal j0;  // {x in A_e(0) : x A_e(1/2) = 0}
  Ideal j;   // j1 + j0
};

JIdeals j_ideals(const Algebra& a, const IdempotentWitness& w);

struct HalfIdeal {
  Ideal ideal;       // J_e(1/2)
  Quotient quotient; // A / J_e(1/2)
  Element e_bar;     // image of e, a verified idempotent of the quotient
};

/// Throws Error("JHalfFailure") if t is not in J_e(1/2); the quotient image
/// of e is re-verified as an idempotent.
HalfIdeal j_half_ideal(const Algebra& a, const PseudoIdempotentWitness& w);

}  // namespace lta
