#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lta/algebra.hpp"
#include "lta/identities.hpp"

namespace lta {

/// Generator for one of the classified dimensionally nilpotent tables.
/// Sizes: OddGametic / OddPseudo have dim 2p+2, the even kinds dim 2p+1.
struct FamilySpec {
  enum class Kind {
    OddGametic,       // e0^2 = e0, e0 ei = ei/2
    OddPseudo,        // as above with e0^2 = e0 + e_n
    EvenGametic,
    EvenPseudo,
    BernsteinNormal,  // e0 e_n = 0, ei e_{n-i} = (-1)^(i-1)/2 e_n
    TrainRank3Type,   // e0 e_n = e_n, ei e_{n-i} = (-1)^i/2 e_n
    LowDim            // a named table of dimension 2..5
  };

  Kind kind = Kind::OddGametic;
  unsigned p = 1;
  std::string tag;  // LowDim only

  static FamilySpec make(Kind kind, unsigned p) { return {kind, p, {}}; }
  static FamilySpec low_dim(std::string tag) { return {Kind::LowDim, 0, std::move(tag)}; }

  /// CLI name, e.g. "odd-pseudo" or the LowDim tag itself.
  std::string name() const;
  /// Report anchor, e.g. "MainThm-2(ii) p=3" or "LowDim n2-lam0".
  std::string anchor() const;
};

/// The six parameterised kinds in report order.
const std::vector<FamilySpec::Kind>& general_family_kinds();
/// LowDim tags in table order.
const std::vector<std::string>& low_dim_tags();

/// Throws Error("UnknownFamily") for an unrecognised name and
/// Error("InvalidParameter") for p = 0 on a parameterised kind.
FamilySpec parse_family(const std::string& name, unsigned p);

/// The explicit multiplication table in the adapted basis e0..en.
Algebra make_family(const FamilySpec& spec);

/// A generated table with the data every classified table ships with.
struct FamilyInstance {
  FamilySpec spec;
  Algebra algebra;
  bool pseudo = false;
  Element e;                 // e0
  std::optional<Element> t;  // e_n for pseudo tables
  Vector weight;             // (1, 0, ..., 0)
  IdentitySpec train;        // the train equation the table satisfies
  bool jordan = true;        // expected Jordan verdict
  Rational lambda_n;         // e0 e_n = lambda_n e_n
};

FamilyInstance family_instance(const FamilySpec& spec);

/// d(e_i) = e_{i+1}, d(e_n) = 0.
Matrix shift_matrix(std::size_t dim);

}  // namespace lta

namespace lta {

/// Basis {e, t, u, r}: e^2 = e + t, u^2 = u + r, et = t/2, ur = r/2.
Algebra pseudo_two_blocks();
/// Basis {e, t1, t2, v}: e^2 = e + t1, e t1 = t1/2, e t2 = t2/2, ev = v, v t1 = t2.
Algebra pseudo_with_v();
/// Gametic algebra with m alleles in its natural basis: a_i a_j = (a_i + a_j)/2.
Algebra gametic_natural(std::size_t m);

}  // namespace lta
