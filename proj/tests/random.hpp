#pragma once

#include <random>

#include "lta/matrix.hpp"

namespace fx {

/// Seeded source of small rationals for property tests.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

  /// Numerator in [-bound, bound], denominator in [1, bound].
  lta::Rational next(int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    lta::Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }
  lta::Vector vector(std::size_t n, int bound = 9) {
    lta::Vector v(n);
    for (auto& x : v) x = next(bound);
    return v;
  }
  lta::Matrix matrix(std::size_t rows, std::size_t cols, int bound = 9) {
    lta::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = next(bound);
    return m;
  }
  /// A matrix of rank at most `rank`, built as a product of thin factors.
  lta::Matrix low_rank(std::size_t rows, std::size_t cols, std::size_t rank) {
    return matrix(rows, rank, 3) * matrix(rank, cols, 3);
  }
  std::size_t index(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fx
