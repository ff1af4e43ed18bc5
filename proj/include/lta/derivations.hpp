#pragma once

#include <cstddef>
#include <vector>

#include "lta/algebra.hpp"
#include "lta/error.hpp"
#include "lta/peirce.hpp"

namespace lta {

/// d(e_i e_j) = d(e_i) e_j + e_i d(e_j) for all basis pairs.
bool satisfies_leibniz(const Algebra& a, const Matrix& m);

/// An endomorphism verified to satisfy the Leibniz rule. Column j holds d(e_j).
class DerivationMatrix {
 public:
  /// Throws Error("NotADerivation").
  static DerivationMatrix make(const Algebra& a, Matrix m);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  Element operator()(const Element& x) const { return m_.apply(x); }

  friend bool operator==(const DerivationMatrix& a, const DerivationMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  explicit DerivationMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Row-major flattening of a square matrix.
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, std::size_t n);

class DerivationSpace {
 public:
  DerivationSpace(std::size_t algebra_dim, std::vector<DerivationMatrix> basis);

  const std::vector<DerivationMatrix>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t algebra_dim() const { return n_; }
  /// Span of the flattened basis matrices, inside Q^(n*n).
  const Subspace& flattened() const { return flat_; }

  bool contains(const Matrix& m) const;
  /// [d_i, d_j] lies in the space for every pair of basis derivations.
  bool is_lie_closed() const;

 private:
  std::size_t n_;
  std::vector<DerivationMatrix> basis_;
  Subspace flat_;
};

/// Kernel of the Leibniz system over the n*n matrix entries.
DerivationSpace derivation_space(const Algebra& a);

/// (d(e), f, g, h). The maps act on Peirce component coordinates with
/// respect to the RREF bases of A_e(1/2), A_e(0) and A_e(1) respectively.
struct DerivationQuadruplet {
  Element de;
  Matrix f;
  Matrix g;
  Matrix h;

  friend bool operator==(const DerivationQuadruplet& a, const DerivationQuadruplet& b) {
    return a.de == b.de && a.f == b.f && a.g == b.g && a.h == b.h;
  }
};

/// Carries the number (1..10) of the first failed condition.
class ConditionViolated : public Error {
 public:
  ConditionViolated(int index, const std::string& message)
      : Error("ConditionViolated", "condition (" + roman(index) + "): " + message),
        index_(index) {}
  int index() const { return index_; }
  static std::string roman(int index);

 private:
  int index_;
};

DerivationQuadruplet quadruplet_decompose(const Algebra& a, const PeirceWitness& w,
                                          const DerivationMatrix& d);

/// Throws Error("NotADerivation") if the assembled map fails Leibniz.
DerivationMatrix quadruplet_reconstruct(const Algebra& a, const PeirceWitness& w,
                                        const DerivationQuadruplet& q);

/// d(t) = 0 and d(e) in A_e(1/2).
bool check_dt_zero(const Algebra& a, const PseudoIdempotentWitness& w, const DerivationMatrix& d);

bool is_d_invariant(const Ideal& ideal, const DerivationMatrix& d);
bool is_d_invariant(const Subspace& s, const DerivationMatrix& d);
bool is_characteristic(const Algebra& a, const Ideal& ideal);
bool is_characteristic(const DerivationSpace& space, const Ideal& ideal);

}  // namespace lta
