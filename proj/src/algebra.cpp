#include "lta/algebra.hpp"

#include <map>
#include <utility>

#include "lta/error.hpp"

namespace lta {

namespace {

void require_dim(const Algebra& a, std::size_t n) {
  if (n != a.dim()) throw Error("DimensionMismatch", "element does not match algebra dimension");
}

std::vector<std::string> names_or_default(std::size_t dim, std::vector<std::string> names) {
  if (names.empty()) return default_basis_names(dim);
  if (names.size() != dim) throw Error("DimensionMismatch", "basis name count differs from dim");
  return names;
}

}  // namespace

std::vector<std::string> default_basis_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

Algebra::Algebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim),
      products_(dim * dim, zero_vector(dim)),
      names_(names_or_default(dim, std::move(basis_names))) {}

Algebra::Algebra(std::size_t dim, std::vector<Vector> products,
                 std::vector<std::string> basis_names)
    : dim_(dim), products_(std::move(products)), names_(names_or_default(dim, std::move(basis_names))) {
  if (products_.size() != dim * dim) throw Error("DimensionMismatch", "table size is not dim^2");
  for (const auto& v : products_)
    if (v.size() != dim) throw Error("DimensionMismatch", "product vector length differs from dim");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (product(i, j) != product(j, i))
        throw Error("AsymmetricTable", "e" + std::to_string(i) + "e" + std::to_string(j) +
                                           " differs from e" + std::to_string(j) + "e" +
                                           std::to_string(i));
  index_constants();
}

void Algebra::index_constants() {
  nonzero_.clear();
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(product(i, j)[k]) != 0) nonzero_.push_back({i, j, k, product(i, j)[k]});
}

TableBuilder::TableBuilder(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), products_(dim * dim, zero_vector(dim)), names_(std::move(basis_names)) {}

TableBuilder& TableBuilder::set(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_)
    throw Error("DimensionMismatch", "product index or length out of range");
  products_[i * dim_ + j] = value;
  products_[j * dim_ + i] = value;
  return *this;
}

TableBuilder& TableBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error("DimensionMismatch", "index out of range");
  products_[i * dim_ + j][k] += coeff;
  if (i != j) products_[j * dim_ + i][k] += coeff;
  return *this;
}

Algebra TableBuilder::build() const { return Algebra(dim_, products_, names_); }

Element mul(const Algebra& a, const Element& x, const Element& y) {
  require_dim(a, x.size());
  require_dim(a, y.size());
  Element z = zero_vector(a.dim());
  for (const auto& c : a.nonzero_constants()) {
    // e_i e_j contributes (x_i y_j + x_j y_i) for i < j, x_i y_i on the diagonal.
    Rational w = x[c.i] * y[c.j];
    if (c.i != c.j) w += x[c.j] * y[c.i];
    if (sgn(w) != 0) z[c.k] += c.value * w;
  }
  return z;
}

PolyVector mul_generic(const Algebra& a, const PolyVector& x, const PolyVector& y) {
  require_dim(a, x.dim());
  require_dim(a, y.dim());
  PolyVector z(a.dim());
  std::size_t cached_i = a.dim(), cached_j = a.dim();
  Poly w;
  for (const auto& c : a.nonzero_constants()) {
    if (c.i != cached_i || c.j != cached_j) {
      w = x.coords[c.i] * y.coords[c.j];
      if (c.i != c.j) w += x.coords[c.j] * y.coords[c.i];
      cached_i = c.i;
      cached_j = c.j;
    }
    if (!w.is_zero()) z.coords[c.k] += c.value * w;
  }
  return z;
}

Element principal_power(const Algebra& a, const Element& x, unsigned k) {
  if (k == 0) throw Error("InvalidPower", "x^0 is undefined without a unit");
  require_dim(a, x.size());
  Element p = x;
  for (unsigned i = 1; i < k; ++i) p = mul(a, p, x);
  return p;
}

Matrix left_mult_matrix(const Algebra& a, const Element& x) {
  require_dim(a, x.size());
  Matrix m(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Element col = mul(a, x, a.basis_element(j));
    for (std::size_t i = 0; i < a.dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

Subspace product_space(const Algebra& a, const Subspace& s, const Subspace& t) {
  require_dim(a, s.ambient_dim());
  require_dim(a, t.ambient_dim());
  std::vector<Vector> gens;
  const auto tv = t.basis_vectors();
  for (const auto& u : s.basis_vectors())
    for (const auto& v : tv) gens.push_back(mul(a, u, v));
  return Subspace::span(a.dim(), gens);
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  require_dim(a, s.ambient_dim());
  for (const auto& v : s.basis_vectors())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(mul(a, a.basis_element(i), v))) return false;
  return true;
}

Subspace annihilator_in(const Algebra& a, const Subspace& s, const Subspace& t) {
  require_dim(a, s.ambient_dim());
  require_dim(a, t.ambient_dim());
  const auto sv = s.basis_vectors();
  const auto tv = t.basis_vectors();
  if (sv.empty()) return Subspace(a.dim());
  // Unknowns c_r with x = sum c_r s_r; one block of dim equations per t.
  Matrix system(tv.size() * a.dim(), sv.size());
  for (std::size_t q = 0; q < tv.size(); ++q) {
    for (std::size_t r = 0; r < sv.size(); ++r) {
      const Element p = mul(a, sv[r], tv[q]);
      for (std::size_t k = 0; k < a.dim(); ++k) system(q * a.dim() + k, r) = p[k];
    }
  }
  std::vector<Vector> gens;
  for (const auto& c : kernel(system).basis_vectors())
    gens.push_back(linear_combination(a.dim(), c, sv));
  return Subspace::span(a.dim(), gens);
}

Ideal Ideal::make(const Algebra& a, Subspace s) {
  if (!is_ideal(a, s)) throw Error("NotAnIdeal", "subspace is not closed under multiplication by A");
  return Ideal(std::move(s));
}

Ideal span_closure_ideal(const Algebra& a, const std::vector<Element>& generators) {
  for (const auto& g : generators) require_dim(a, g.size());
  Subspace s = Subspace::span(a.dim(), generators);
  const Subspace whole = Subspace::full(a.dim());
  while (true) {
    Subspace next = sum(s, product_space(a, whole, s));
    if (next.dim() == s.dim()) break;
    s = std::move(next);
  }
  return Ideal::make(a, std::move(s));
}

Subspace value_span(const PolyVector& v) {
  std::map<Monomial, Vector, GradedLexLess> coeffs;
  for (std::size_t k = 0; k < v.dim(); ++k) {
    for (const auto& [m, c] : v.coords[k].terms()) {
      auto it = coeffs.try_emplace(m, zero_vector(v.dim())).first;
      it->second[k] = c;
    }
  }
  std::vector<Vector> gens;
  gens.reserve(coeffs.size());
  for (auto& [m, vec] : coeffs) gens.push_back(std::move(vec));
  return Subspace::span(v.dim(), gens);
}

Ideal associator_ideal(const Algebra& a) {
  const PolyVector x = generic_element(a.dim(), 0);
  const PolyVector x2 = mul_generic(a, x, x);
  const PolyVector assoc = mul_generic(a, mul_generic(a, x2, x), x) - mul_generic(a, x2, x2);
  return span_closure_ideal(a, value_span(assoc).basis_vectors());
}

Quotient quotient(const Algebra& a, const Ideal& ideal) {
  const Subspace& s = ideal.subspace();
  require_dim(a, s.ambient_dim());
  if (!is_ideal(a, s)) throw Error("NotAnIdeal", "quotient by a non-ideal");
  const std::size_t n = a.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : s.pivots()) pivot[p] = true;
  std::vector<std::size_t> complement;
  std::vector<std::size_t> position(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!pivot[i]) {
      position[i] = complement.size();
      complement.push_back(i);
    }
  }
  const std::size_t q = complement.size();
  // e_j for a pivot column j is congruent to e_j - (its RREF row), which
  // has support on non-pivot columns only.
  Matrix proj(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!pivot[j]) {
      proj(position[j], j) = 1;
      continue;
    }
    std::size_t r = 0;
    while (s.pivots()[r] != j) ++r;
    for (std::size_t c : complement) proj(position[c], j) = -s.basis()(r, c);
  }
  std::vector<Vector> table(q * q);
  std::vector<std::string> names;
  for (std::size_t u = 0; u < q; ++u) {
    names.push_back(a.basis_names()[complement[u]]);
    for (std::size_t v = 0; v < q; ++v)
      table[u * q + v] = proj.apply(a.product(complement[u], complement[v]));
  }
  return Quotient{Algebra(q, std::move(table), std::move(names)), std::move(proj),
                  std::move(complement)};
}

std::optional<std::size_t> nilpotency_index(const Algebra& a) {
  const std::size_t n = a.dim();
  const Subspace whole = Subspace::full(n);
  // A is nilpotent iff its multiplication algebra is, i.e. iff the chain
  // V <- A V starting from A reaches zero; that chain stabilises within
  // n steps, which decides nilpotency before the power chain is walked.
  Subspace v = whole;
  while (!v.is_zero()) {
    Subspace next = product_space(a, whole, v);
    if (next == v) return std::nullopt;
    v = std::move(next);
  }
  std::vector<Subspace> powers{Subspace(n), whole};  // powers[k] = A<k>
  if (n == 0) return 1;
  for (std::size_t k = 2;; ++k) {
    Subspace next(n);
    for (std::size_t i = 1; i <= k / 2; ++i) next = sum(next, product_space(a, powers[i], powers[k - i]));
    if (next.is_zero()) return k;
    powers.push_back(std::move(next));
  }
}

Algebra change_basis(const Algebra& a, const Matrix& basis, std::vector<std::string> names) {
  if (basis.rows() != a.dim() || basis.cols() != a.dim())
    throw Error("DimensionMismatch", "change of basis must be dim x dim");
  const auto inv = inverse(basis);
  if (!inv) throw Error("SingularBasis", "new basis vectors are linearly dependent");
  const auto cols = basis.column_vectors();
  const std::size_t n = a.dim();
  std::vector<Vector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = inv->apply(mul(a, cols[i], cols[j]));
  return Algebra(n, std::move(table), std::move(names));
}

}  // namespace lta
