#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lta/rational.hpp"

namespace lta {

/// Product of variables X_i^k, stored as (index, exponent) pairs sorted by
/// index with no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order with X0 > X1 > ...: lower total degree first,
/// then the larger exponent on the earliest differing variable wins.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q. Terms never carry a zero
/// coefficient; iteration order is ascending graded-lex.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexLess>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(std::uint32_t index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds `c * m` in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);

  /// Value at a point; `values[i]` is assigned to X_i (missing indices read 0).
  Rational evaluate(const std::vector<Rational>& values) const;

  /// Highest-first human-readable form, e.g. "X0^2 + 2*X0*X1 - 1/2*X1".
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, const Poly& p);

/// A generic algebra element: one polynomial per basis coordinate.
struct PolyVector {
  std::vector<Poly> coords;

  PolyVector() = default;
  explicit PolyVector(std::size_t dim) : coords(dim) {}

  std::size_t dim() const { return coords.size(); }
  /// Numeric coordinates at a point (see Poly::evaluate).
  Vector evaluate(const std::vector<Rational>& values) const;

  friend bool operator==(const PolyVector& a, const PolyVector& b) {
    return a.coords == b.coords;
  }
};

PolyVector operator+(const PolyVector& a, const PolyVector& b);
PolyVector operator-(const PolyVector& a, const PolyVector& b);
PolyVector operator*(const Rational& s, const PolyVector& v);
PolyVector operator*(const Poly& s, const PolyVector& v);

/// Sum over i of X_{block*dim + i} e_i.
PolyVector generic_element(std::size_t dim, std::size_t var_block);

/// Sum over r of X_{first_var + r} * basis[r]; used to build a generic
/// element of a subspace from its basis vectors.
PolyVector generic_in_span(std::size_t dim, const std::vector<Vector>& basis,
                           std::uint32_t first_var);

/// Numeric vector lifted to constant polynomials.
PolyVector constant_vector(const Vector& v);

/// Applies a rational matrix (rows x dim) coordinate-wise to a PolyVector.
class Matrix;
PolyVector apply(const Matrix& m, const PolyVector& v);

/// True iff every coordinate is the zero polynomial. Over an infinite field
/// this decides whether the vector vanishes at every point.
bool is_zero_vector(const PolyVector& v);

}  // namespace lta
