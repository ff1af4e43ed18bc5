#include <doctest.h>

#include "lta/matrix.hpp"
#include "lta/poly.hpp"
#include "random.hpp"

using namespace lta;

namespace {

Poly X(std::uint32_t i) { return Poly::variable(i); }

Poly random_poly(fx::RandomRationals& rnd, std::uint32_t vars) {
  Poly p;
  const std::size_t terms = rnd.index(5);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m;
    const std::size_t factors = rnd.index(3);
    for (std::size_t f = 0; f < factors; ++f)
      m = m * Monomial::variable(static_cast<std::uint32_t>(rnd.index(vars)), 1 + static_cast<std::uint32_t>(rnd.index(2)));
    p.add_term(m, rnd.next(5));
  }
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  const Poly s = X(0) + X(1);
  CHECK(s * s == X(0) * X(0) + Rational(2) * X(0) * X(1) + X(1) * X(1));
  CHECK((s * Poly()).is_zero());
  CHECK((X(0) - X(1)) * (X(0) + X(1)) == X(0) * X(0) - X(1) * X(1));
  CHECK((s * s).to_string() == "X0^2 + 2*X0*X1 + X1^2");
  CHECK((Rational(-1, 2) * X(1) + Poly::constant(3)).to_string() == "-1/2*X1 + 3");
}

TEST_CASE("graded-lex order puts higher degree and earlier variables first") {
  const Poly p = X(1) + X(0) * X(0) + X(0) + Poly::constant(1);
  CHECK(p.to_string() == "X0^2 + X0 + X1 + 1");
}

TEST_CASE("generic_element blocks") {
  CHECK(generic_element(2, 0).coords == std::vector<Poly>{X(0), X(1)});
  CHECK(generic_element(2, 1).coords == std::vector<Poly>{X(2), X(3)});
  CHECK(generic_element(3, 2).coords == std::vector<Poly>{X(6), X(7), X(8)});
}

TEST_CASE("is_zero_vector") {
  CHECK(is_zero_vector(PolyVector(3)));
  PolyVector v(2);
  v.coords[0] = X(0) - X(0);
  CHECK(is_zero_vector(v));
  v.coords[0] = X(0) * X(1);
  CHECK_FALSE(is_zero_vector(v));
}

TEST_CASE("apply and generic_in_span") {
  Matrix m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 2;
  const PolyVector v = apply(m, generic_element(2, 0));
  CHECK(v.coords[0] == X(1));
  CHECK(v.coords[1] == Rational(2) * X(0));
  const PolyVector w = generic_in_span(3, {{1, 0, 1}, {0, 1, 0}}, 5);
  CHECK(w.coords[0] == X(5));
  CHECK(w.coords[1] == X(6));
  CHECK(w.coords[2] == X(5));
}

TEST_CASE("property: ring laws on random polynomials") {
  fx::RandomRationals rnd(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rnd, 4), b = random_poly(rnd, 4), c = random_poly(rnd, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    const Poly ab = a * b;
    for (const auto& [m, coeff] : ab.terms()) CHECK(sgn(coeff) != 0);
  }
}

TEST_CASE("property: evaluation is a ring homomorphism and zero vectors evaluate to zero") {
  fx::RandomRationals rnd(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rnd, 3), b = random_poly(rnd, 3);
    const Vector pt = rnd.vector(3);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));

    PolyVector z(2);
    z.coords[0] = a * b - b * a;
    z.coords[1] = a - a;
    REQUIRE(is_zero_vector(z));
    for (int k = 0; k < 100; ++k) CHECK(is_zero(z.evaluate(rnd.vector(3))));

    if (!a.is_zero()) {
      PolyVector nz(1);
      nz.coords[0] = a;
      bool seen_nonzero = false;
      for (int k = 0; k < 100 && !seen_nonzero; ++k) seen_nonzero = !is_zero(nz.evaluate(rnd.vector(3)));
      CHECK(seen_nonzero);
    }
  }
}
