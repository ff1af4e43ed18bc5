#include <doctest.h>

#include "lta/error.hpp"
#include "lta/matrix.hpp"
#include "lta/subspace.hpp"
#include "random.hpp"

using namespace lta;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Matrix mat(std::size_t rows, std::size_t cols, std::initializer_list<Rational> xs) {
  Matrix m(rows, cols);
  std::size_t i = 0;
  for (const auto& x : xs) {
    m(i / cols, i % cols) = x;
    ++i;
  }
  return m;
}

bool lowest_terms(const Rational& r) {
  return r.get_den() > 0 && gcd(r.get_num(), r.get_den()) == 1;
}

}  // namespace

TEST_CASE("parse_rational accepts p, -p and p/q") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("-1/2") == q(-1, 2));
  CHECK(lowest_terms(parse_rational("-10/4")));
  CHECK_THROWS_WITH_AS(parse_rational("1/0"), doctest::Contains("zero denominator"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  try {
    parse_rational("2/0");
  } catch (const Error& e) {
    CHECK(e.kind() == "BadRational");
  }
}

TEST_CASE("rref examples") {
  CHECK(rref(mat(2, 2, {2, 0, 0, 2})) == Matrix::identity(2));
  CHECK(rref(mat(2, 2, {1, 2, 2, 4})) == mat(2, 2, {1, 2, 0, 0}));
  CHECK(rref(mat(2, 2, {0, q(1, 2), 1, 0})) == Matrix::identity(2));
  CHECK(rank(mat(2, 3, {0, 0, 0, 0, 0, 0})) == 0);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix(2, 3)) == Subspace::full(3));
  const Subspace k = kernel(mat(1, 3, {1, -1, 0}));
  CHECK(k == Subspace::span(3, {{1, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("subspace lattice examples") {
  const Subspace x = Subspace::span(2, {{1, 0}});
  const Subspace y = Subspace::span(2, {{0, 1}});
  CHECK(intersect(x, y).is_zero());
  CHECK(sum(x, y) == Subspace::full(2));
  CHECK(Subspace::span(2, {{1, 2}}).contains(Vector{2, 4}));
  CHECK_FALSE(Subspace::span(2, {{1, 2}}).contains(Vector{2, 3}));
  CHECK(Subspace::span(3, {{2, 4, 6}}) == Subspace::span(3, {{q(1, 3), q(2, 3), 1}}));
  CHECK_THROWS_AS(intersect(x, Subspace::full(3)), Error);
  CHECK_THROWS_AS(sum(x, Subspace::full(3)), Error);
}

TEST_CASE("inverse") {
  const Matrix m = mat(2, 2, {1, 2, 3, 4});
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == Matrix::identity(2));
  CHECK_FALSE(inverse(mat(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("property: rref is idempotent and rank-nullity holds") {
  fx::RandomRationals rnd(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rnd.index(6), cols = 1 + rnd.index(6);
    const Matrix m = trial % 2 ? rnd.matrix(rows, cols) : rnd.low_rank(rows, cols, 1 + rnd.index(3));
    const Matrix r = rref(m);
    CHECK(rref(r) == r);
    CHECK(kernel(m).dim() + rank(m) == cols);
    for (const auto& v : kernel(m).basis_vectors()) CHECK(is_zero(m.apply(v)));
    for (const auto& x : r.entries()) CHECK(lowest_terms(x));
  }
}

TEST_CASE("property: Grassmann identity on random subspaces") {
  fx::RandomRationals rnd(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rnd.index(8);
    const auto random_space = [&] {
      std::vector<Vector> gens;
      const std::size_t k = rnd.index(n + 1);
      const Matrix m = rnd.low_rank(k == 0 ? 1 : k, n, 1 + rnd.index(n));
      if (k > 0)
        for (const auto& row : m.row_vectors()) gens.push_back(row);
      return Subspace::span(n, gens);
    };
    const Subspace a = random_space(), b = random_space();
    CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    CHECK(sum(a, b).contains(a));
    CHECK(a.contains(intersect(a, b)));
    CHECK(b.contains(intersect(a, b)));
  }
}
