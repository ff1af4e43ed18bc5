#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lta/algebra.hpp"

namespace lta {

/// The closed set of polynomial identities the checker decides.
struct IdentitySpec {
  enum class Kind { LieTriple, Jordan, TrainRank2, TrainRank3 };

  Kind kind = Kind::LieTriple;
  // TrainRank3 only: x^3 + c2 w(x) x^2 + c1 w(x)^2 x = 0.
  Rational c2 = 0;
  Rational c1 = 0;

  static IdentitySpec lie_triple() { return {Kind::LieTriple, 0, 0}; }
  static IdentitySpec jordan() { return {Kind::Jordan, 0, 0}; }
  /// x^2 - w(x) x = 0.
  static IdentitySpec train_rank2() { return {Kind::TrainRank2, 0, 0}; }
  static IdentitySpec train_rank3(Rational c2, Rational c1) {
    return {Kind::TrainRank3, std::move(c2), std::move(c1)};
  }

  bool is_train() const { return kind == Kind::TrainRank2 || kind == Kind::TrainRank3; }
  /// "lie-triple", "jordan", "train2", "train3:<c2>,<c1>".
  std::string name() const;
};

/// A linear form w on the algebra that is a nonzero algebra homomorphism
/// onto Q: w(e_i e_j) = w(e_i) w(e_j).
class WeightMap {
 public:
  /// Throws Error("NotAWeight") unless the form is a nonzero homomorphism.
  static WeightMap make(const Algebra& a, Vector coeffs);

  const Vector& coeffs() const { return coeffs_; }
  Rational operator()(const Element& x) const;

 private:
  explicit WeightMap(Vector c) : coeffs_(std::move(c)) {}
  Vector coeffs_;
};

bool check_weight(const Algebra& a, const Vector& coeffs);

struct Witness {
  Element x;
  Element y;  // zero vector for one-variable identities
};

struct IdentityReport {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

/// Symbolic residual of the identity on generic x (variable block 0) and
/// y (block 1). Train identities take `weight` and ignore y.
PolyVector identity_residual(const Algebra& a, const IdentitySpec& spec,
                             const WeightMap* weight = nullptr);

/// Numeric residual of the identity at the point (x, y).
Element evaluate_identity(const Algebra& a, const IdentitySpec& spec, const Element& x,
                          const Element& y, const WeightMap* weight = nullptr);

/// 2x(x(xy)) + y x^3 - 3x(y x^2) = 0.
IdentityReport check_lie_triple(const Algebra& a);
/// x^2 (y x) - (x^2 y) x = 0.
IdentityReport check_jordan(const Algebra& a);
/// Throws Error("NotATrainIdentity") when `spec` is not a train equation.
IdentityReport check_train(const Algebra& a, const WeightMap& weight, const IdentitySpec& spec);
/// Dispatches on the spec kind; `weight` is required for train kinds.
IdentityReport check_identity(const Algebra& a, const IdentitySpec& spec,
                              const WeightMap* weight = nullptr);

/// 2L^3 - 3L^2 + L = 0 for L = L_e. Throws Error("NotIdempotent") unless e^2 = e.
bool check_Le_minimal_poly(const Algebra& a, const Element& e);

}  // namespace lta
