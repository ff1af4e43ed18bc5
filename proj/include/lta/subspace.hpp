#pragma once

#include <cstddef>
#include <vector>

#include "lta/matrix.hpp"

namespace lta {

/// A linear subspace of K^n stored by its reduced row-echelon basis.
///
/// The RREF of a row space is unique, so two subspaces are equal exactly
/// when their stored bases are identical.
class Subspace {
 public:
  /// The zero subspace of K^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of `v` after eliminating every pivot coordinate; zero iff v
  /// lies in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace lta
