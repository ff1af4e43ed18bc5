#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lta/derivations.hpp"
#include "lta/families.hpp"

namespace lta {

struct DimNilVerdict {
  bool yes = false;
  /// yes: the nilpotency index (= dim). no: the first power that breaks the
  /// definition, i.e. dim when d^dim != 0, else dim - 1.
  std::size_t power = 0;
};

/// d^dim = 0 and d^(dim-1) != 0, with d^0 = I.
DimNilVerdict check_dim_nilpotent(const Algebra& a, const DerivationMatrix& d);

struct AdaptedBasis {
  Matrix change;  // row i = new e_i in old coordinates
  DerivationMatrix d_witness;
  Algebra algebra;  // the table rewritten in the adapted basis
};

/// Basis {v, d v, ..., d^n v}. Without `start`, v is the first standard basis
/// vector with d^n v != 0. Throws Error("NotDimensionallyNilpotent") when the
/// precondition fails and Error("BadStartVector") when d^n(start) = 0.
AdaptedBasis adapted_basis(const Algebra& a, const DerivationMatrix& d,
                           const std::optional<Element>& start = std::nullopt);

struct SearchResult {
  std::optional<DerivationMatrix> witness;
  std::size_t candidates_tried = 0;
};

/// Basis derivations first, then `budget` seeded random combinations with
/// integer coefficients in [-3, 3]. An empty result is not a proof.
SearchResult search_dim_nilpotent(const Algebra& a, std::size_t budget = 200,
                                  std::uint64_t seed = 0);

struct ClaimLine {
  std::string anchor;  // "MainThm-2(ii) p=3"
  std::string claim;   // "lie-triple"
  bool passed = false;
  std::string detail;

  std::string to_string() const;
};

struct TheoremReport {
  std::vector<ClaimLine> lines;
  bool all_passed() const;
  std::size_t failures() const;
};

/// Every family kind for p = 1..p_max, then every LowDim table. Throws
/// Error("InvalidParameter") when p_max = 0.
TheoremReport verify_main_theorem(unsigned p_max);

}  // namespace lta
