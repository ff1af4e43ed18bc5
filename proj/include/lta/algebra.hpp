#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lta/matrix.hpp"
#include "lta/poly.hpp"
#include "lta/subspace.hpp"

namespace lta {

/// Coordinates of an algebra element in the algebra's basis.
using Element = Vector;

/// A finite-dimensional commutative algebra over Q given by structure
/// constants: e_i e_j = sum_k gamma(i, j)[k] e_k with gamma(i, j) = gamma(j, i).
class Algebra {
 public:
  /// The zero algebra (all products vanish).
  explicit Algebra(std::size_t dim, std::vector<std::string> basis_names = {});

  /// `products[i * dim + j]` is the coordinate vector of e_i e_j. Throws
  /// Error("AsymmetricTable") unless the table is symmetric.
  Algebra(std::size_t dim, std::vector<Vector> products,
          std::vector<std::string> basis_names = {});

  std::size_t dim() const { return dim_; }
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  const std::vector<std::string>& basis_names() const { return names_; }
  Element basis_element(std::size_t i) const { return unit_vector(dim_, i); }

  struct Constant {
    std::size_t i, j, k;  // i <= j
    Rational value;
  };
  /// Nonzero structure constants with i <= j, in (i, j, k) order.
  const std::vector<Constant>& nonzero_constants() const { return nonzero_; }

  /// Structural equality of the multiplication tables (names ignored).
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.products_ == b.products_;
  }

 private:
  void index_constants();

  std::size_t dim_;
  std::vector<Vector> products_;
  std::vector<std::string> names_;
  std::vector<Constant> nonzero_;
};

/// Incremental construction of a symmetric multiplication table.
class TableBuilder {
 public:
  explicit TableBuilder(std::size_t dim, std::vector<std::string> basis_names = {});

  /// Sets e_i e_j (and e_j e_i) to `value`.
  TableBuilder& set(std::size_t i, std::size_t j, const Vector& value);
  /// Adds `coeff * e_k` to e_i e_j (and e_j e_i).
  TableBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff);

  Algebra build() const;

 private:
  std::size_t dim_;
  std::vector<Vector> products_;
  std::vector<std::string> names_;
};

/// Default labels e0, e1, ...
std::vector<std::string> default_basis_names(std::size_t dim);

Element mul(const Algebra& a, const Element& x, const Element& y);
PolyVector mul_generic(const Algebra& a, const PolyVector& x, const PolyVector& y);

/// x^1 = x, x^k = x^(k-1) x. Throws Error("InvalidPower") for k = 0.
Element principal_power(const Algebra& a, const Element& x, unsigned k);

/// Matrix of y -> x y; column j holds the coordinates of x e_j.
Matrix left_mult_matrix(const Algebra& a, const Element& x);

/// span{s t : s in S, t in T}.
Subspace product_space(const Algebra& a, const Subspace& s, const Subspace& t);

bool is_ideal(const Algebra& a, const Subspace& s);

/// {x in S : x T = 0}.
Subspace annihilator_in(const Algebra& a, const Subspace& s, const Subspace& t);

/// A subspace verified to satisfy A I within I.
class Ideal {
 public:
  /// Throws Error("NotAnIdeal") when A S is not contained in S.
  static Ideal make(const Algebra& a, Subspace s);
  static Ideal zero(const Algebra& a) { return Ideal(Subspace(a.dim())); }

  const Subspace& subspace() const { return subspace_; }
  std::size_t dim() const { return subspace_.dim(); }
  bool is_zero() const { return subspace_.is_zero(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.subspace_ == b.subspace_; }

 private:
  explicit Ideal(Subspace s) : subspace_(std::move(s)) {}
  Subspace subspace_;
};

/// Smallest ideal containing the generators: S <- S + A S until stable.
Ideal span_closure_ideal(const Algebra& a, const std::vector<Element>& generators);

/// Span of the values of a polynomial map over Q, read off as the span of
/// its monomial coefficient vectors.
Subspace value_span(const PolyVector& v);

/// The ideal generated by all associators (x^2, x, x) = (x^2 x) x - x^2 x^2.
Ideal associator_ideal(const Algebra& a);

struct Quotient {
  Algebra algebra;
  Matrix projection;                   // (dim - dim I) x dim
  std::vector<std::size_t> complement; // basis indices kept, ascending
};

/// A/I on the complement spanned by the standard basis vectors at the
/// non-pivot columns of I's RREF basis.
Quotient quotient(const Algebra& a, const Ideal& ideal);

/// Smallest k with A<k> = 0 where A<1> = A and A<k> = sum_{i+j=k} A<i> A<j>;
/// nullopt when A is not nilpotent.
std::optional<std::size_t> nilpotency_index(const Algebra& a);

/// The same algebra written in a new basis; column i of `basis` holds the
/// old coordinates of the i-th new basis vector. Throws on a singular basis.
Algebra change_basis(const Algebra& a, const Matrix& basis,
                     std::vector<std::string> names = {});

}  // namespace lta
