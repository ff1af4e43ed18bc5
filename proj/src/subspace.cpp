#include "lta/subspace.hpp"

#include "lta/error.hpp"

namespace lta {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error("DimensionMismatch", "subspaces live in different ambient spaces");
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  Subspace s(ambient_dim);
  if (generators.empty()) return s;
  const RowEchelon ech = row_echelon(Matrix::from_rows(generators, ambient_dim));
  const std::size_t r = ech.pivots.size();
  s.basis_ = Matrix(r, ambient_dim);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) s.basis_(i, j) = ech.reduced(i, j);
  s.pivots_ = ech.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) gens.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, gens);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error("DimensionMismatch", "vector not in ambient space");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_(i, j)) != 0) r[j] -= f * basis_(i, j);
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return lta::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  auto gens = a.basis_vectors();
  for (auto& v : b.basis_vectors()) gens.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  const std::size_t ka = a.dim();
  const std::size_t kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace(n);
  // Solve sum_r c_r a_r - sum_s c'_s b_s = 0; the a-part of each solution
  // spans the intersection.
  Matrix system(n, ka + kb);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < ka; ++r) system(j, r) = a.basis()(r, j);
    for (std::size_t s = 0; s < kb; ++s) system(j, ka + s) = -b.basis()(s, j);
  }
  const Subspace sol = kernel(system);
  std::vector<Vector> gens;
  const auto a_rows = a.basis_vectors();
  for (const auto& c : sol.basis_vectors()) {
    std::vector<Rational> coeffs(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(ka));
    gens.push_back(linear_combination(n, coeffs, a_rows));
  }
  return Subspace::span(n, gens);
}

}  // namespace lta
