#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lta/rational.hpp"

namespace lta {

class Subspace;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Each vector becomes one row; every vector must have `cols` entries.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Each vector becomes one column; every vector must have `rows` entries.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  std::vector<Vector> column_vectors() const;

  /// Matrix-vector product `M v`.
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);

/// `m^k` for square `m`; `m^0` is the identity.
Matrix power(const Matrix& m, unsigned k);

struct RowEchelon {
  Matrix reduced;                    // zero rows kept at the bottom
  std::vector<std::size_t> pivots;   // pivot column of row r, r < rank
};

/// Gauss-Jordan elimination: pivots on the first nonzero column, every
/// pivot normalised to 1 and cleared above and below.
RowEchelon row_echelon(const Matrix& m);

/// The unique reduced row-echelon form of `m` (same shape, zero rows last).
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Null space `{v : m v = 0}` as a subspace of K^cols.
Subspace kernel(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace lta
