#include "lta/poly.hpp"

#include "lta/error.hpp"
#include "lta/matrix.hpp"

namespace lta {

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(index, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      r.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first > fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second < fb[k].second;
  }
  return fa.size() < fb.size();
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(std::uint32_t index) {
  Poly p;
  p.add_term(Monomial::variable(index), Rational(1));
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Rational Poly::evaluate(const std::vector<Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [var, exp] : m.factors()) {
      const Rational x = var < values.size() ? values[var] : Rational(0);
      for (std::uint32_t e = 0; e < exp; ++e) term *= x;
      if (sgn(term) == 0) break;
    }
    total += term;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string mono;
    for (const auto& [var, exp] : m.factors()) {
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(var);
      if (exp > 1) mono += "^" + std::to_string(exp);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly operator*(const Rational& s, const Poly& p) {
  Poly r;
  if (sgn(s) == 0) return r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, s * c);
  return r;
}

Vector PolyVector::evaluate(const std::vector<Rational>& values) const {
  Vector out;
  out.reserve(coords.size());
  for (const auto& p : coords) out.push_back(p.evaluate(values));
  return out;
}

namespace {

void require_same_dim(const PolyVector& a, const PolyVector& b) {
  if (a.dim() != b.dim()) throw Error("DimensionMismatch", "generic vectors differ in length");
}

}  // namespace

PolyVector operator+(const PolyVector& a, const PolyVector& b) {
  require_same_dim(a, b);
  PolyVector r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] += b.coords[i];
  return r;
}

PolyVector operator-(const PolyVector& a, const PolyVector& b) {
  require_same_dim(a, b);
  PolyVector r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

PolyVector operator*(const Rational& s, const PolyVector& v) {
  PolyVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r.coords[i] = s * v.coords[i];
  return r;
}

PolyVector operator*(const Poly& s, const PolyVector& v) {
  PolyVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r.coords[i] = s * v.coords[i];
  return r;
}

PolyVector generic_element(std::size_t dim, std::size_t var_block) {
  PolyVector v(dim);
  for (std::size_t i = 0; i < dim; ++i)
    v.coords[i] = Poly::variable(static_cast<std::uint32_t>(var_block * dim + i));
  return v;
}

PolyVector generic_in_span(std::size_t dim, const std::vector<Vector>& basis,
                           std::uint32_t first_var) {
  PolyVector v(dim);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const Monomial var = Monomial::variable(first_var + static_cast<std::uint32_t>(r));
    for (std::size_t i = 0; i < dim; ++i) v.coords[i].add_term(var, basis[r].at(i));
  }
  return v;
}

PolyVector constant_vector(const Vector& v) {
  PolyVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r.coords[i] = Poly::constant(v[i]);
  return r;
}

PolyVector apply(const Matrix& m, const PolyVector& v) {
  if (m.cols() != v.dim()) throw Error("DimensionMismatch", "matrix does not act on vector");
  PolyVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) r.coords[i] += m(i, j) * v.coords[j];
  return r;
}

bool is_zero_vector(const PolyVector& v) {
  for (const auto& p : v.coords)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace lta
