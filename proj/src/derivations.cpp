#include "lta/derivations.hpp"

#include <functional>
#include <optional>

namespace lta {

bool satisfies_leibniz(const Algebra& a, const Matrix& m) {
  const std::size_t n = a.dim();
  if (m.rows() != n || m.cols() != n) return false;
  const std::vector<Vector> images = m.column_vectors();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Element lhs = m.apply(a.product(i, j));
      const Element rhs = mul(a, images[i], a.basis_element(j)) + mul(a, a.basis_element(i), images[j]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

DerivationMatrix DerivationMatrix::make(const Algebra& a, Matrix m) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw Error("DimensionMismatch", "derivation matrix must be " + std::to_string(a.dim()) +
                                         "x" + std::to_string(a.dim()));
  if (!satisfies_leibniz(a, m)) throw Error("NotADerivation", "the Leibniz rule fails");
  return DerivationMatrix(std::move(m));
}

Vector vectorize(const Matrix& m) { return m.entries(); }

Matrix unvectorize(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

DerivationSpace::DerivationSpace(std::size_t algebra_dim, std::vector<DerivationMatrix> basis)
    : n_(algebra_dim), basis_(std::move(basis)), flat_(algebra_dim * algebra_dim) {
  std::vector<Vector> flat;
  flat.reserve(basis_.size());
  for (const auto& d : basis_) flat.push_back(vectorize(d.matrix()));
  flat_ = Subspace::span(n_ * n_, flat);
}

bool DerivationSpace::contains(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) return false;
  return flat_.contains(vectorize(m));
}

bool DerivationSpace::is_lie_closed() const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      const Matrix& x = basis_[i].matrix();
      const Matrix& y = basis_[j].matrix();
      if (!contains(x * y - y * x)) return false;
    }
  }
  return true;
}

DerivationSpace derivation_space(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::size_t unknowns = n * n;
  const auto at = [n](std::size_t r, std::size_t c) { return r * n + c; };
  Matrix system(n * n * (n + 1) / 2, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vector& gij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(gij[m]) != 0) system(row, at(k, m)) += gij[m];
          const Rational& gmj = a.product(m, j)[k];
          if (sgn(gmj) != 0) system(row, at(m, i)) -= gmj;
          const Rational& gim = a.product(i, m)[k];
          if (sgn(gim) != 0) system(row, at(m, j)) -= gim;
        }
      }
    }
  }
  std::vector<DerivationMatrix> basis;
  for (const Vector& v : kernel(system).basis_vectors())
    basis.push_back(DerivationMatrix::make(a, unvectorize(v, n)));
  return DerivationSpace(n, std::move(basis));
}

std::string ConditionViolated::roman(int index) {
  static const char* const numerals[] = {"?", "i", "ii", "iii", "iv", "v",
                                         "vi", "vii", "viii", "ix", "x"};
  return (index >= 1 && index <= 10) ? numerals[index] : numerals[0];
}

namespace {

/// Embedding and coordinate maps for one Peirce component.
struct Chart {
  Subspace space = Subspace(0);
  Matrix embed;   // n x k, columns are the RREF basis
  Matrix coords;  // k x n, rows of change^-1 for this block
  Matrix proj;    // embed * coords

  std::size_t dim() const { return space.dim(); }
  /// Coordinates of a vector already known to lie in the component.
  Vector local(const Vector& v) const {
    Vector out;
    out.reserve(space.dim());
    for (std::size_t p : space.pivots()) out.push_back(v[p]);
    return out;
  }
  /// Extends a k x k component map to the whole space, zero elsewhere.
  Matrix extend(const Matrix& local_map) const { return embed * local_map * coords; }
};

struct Frame {
  PeirceDecomposition pd;
  Chart one, half, zero;
  Element e;
  std::optional<Element> t;
};

Frame make_frame(const Algebra& a, const PeirceWitness& w) {
  Frame fr{peirce_decompose(a, witness_element(w)), {}, {}, {}, witness_element(w), std::nullopt};
  if (const auto* p = std::get_if<PseudoIdempotentWitness>(&w)) fr.t = p->t;
  const std::size_t n = a.dim();
  const Matrix inv = *inverse(fr.pd.change);
  std::size_t offset = 0;
  for (auto [chart, eig] : {std::pair{&fr.one, PeirceEigen::One},
                            std::pair{&fr.half, PeirceEigen::Half},
                            std::pair{&fr.zero, PeirceEigen::Zero}}) {
    chart->space = fr.pd.component(eig);
    const std::size_t k = chart->space.dim();
    chart->embed = Matrix::from_columns(chart->space.basis_vectors(), n);
    chart->coords = Matrix(k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) chart->coords(r, c) = inv(offset + r, c);
    chart->proj = fr.pd.projection(eig);
    offset += k;
  }
  return fr;
}

/// Builds the component map column by column; `image` returns the value of
/// the map on a component basis vector, which must lie in the component.
Matrix component_map(const Chart& chart, int condition, const char* what,
                     const std::function<Vector(const Vector&)>& image) {
  Matrix out(chart.dim(), chart.dim());
  const std::vector<Vector> basis = chart.space.basis_vectors();
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const Vector v = image(basis[r]);
    if (!chart.space.contains(v))
      throw ConditionViolated(condition, std::string(what) + " leaves its component at basis vector " +
                                             to_string(basis[r]));
    const Vector loc = chart.local(v);
    for (std::size_t c = 0; c < loc.size(); ++c) out(c, r) = loc[c];
  }
  return out;
}

void require(bool ok, int condition, const std::string& message) {
  if (!ok) throw ConditionViolated(condition, message);
}

void audit_conditions(const Algebra& a, const Frame& fr, const Matrix& H, const Matrix& F,
                      const Matrix& G) {
  const auto m = [&](const Element& x, const Element& y) { return mul(a, x, y); };
  const Matrix& P1 = fr.one.proj;
  const Matrix& Ph = fr.half.proj;
  const Matrix& P0 = fr.zero.proj;
  const auto b1 = fr.one.space.basis_vectors();
  const auto bh = fr.half.space.basis_vectors();
  const auto b0 = fr.zero.space.basis_vectors();
  const bool pseudo = fr.t.has_value();

  // Leibniz-type rule for a map `D` on pairs from one component.
  const auto twisted = [&](const std::vector<Vector>& basis, const Matrix& D, const Matrix& P,
                           int condition, const char* label) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        const Element& x = basis[i];
        const Element& y = basis[j];
        const Element xy = m(x, y);
        const Element rule = m(D.apply(x), y) + m(x, D.apply(y));
        if (!pseudo) {
          require(D.apply(xy) == rule, condition, std::string(label) + " is not a derivation");
          continue;
        }
        const Element inner = D.apply(P.apply(xy));
        require(inner == P.apply(rule), condition, std::string(label) + " fails the projected rule");
        const Element half = F.apply(Ph.apply(xy));
        require(half == Ph.apply(rule), condition, "f on the 1/2-part disagrees with the rule");
        require(half == Rational(2) * m(inner, *fr.t), condition, "f on the 1/2-part is not 2 D(.)t");
      }
    }
  };
  twisted(b1, H, P1, 5, "h");
  twisted(b0, G, P0, 6, "g");

  for (std::size_t i = 0; i < bh.size(); ++i) {
    for (std::size_t j = i; j < bh.size(); ++j) {
      const Element xy = m(bh[i], bh[j]);
      const Element rule = m(F.apply(bh[i]), bh[j]) + m(bh[i], F.apply(bh[j]));
      require(H.apply(P1.apply(xy)) == P1.apply(rule), 7, "h on (xy)_1 mismatch");
      require(G.apply(P0.apply(xy)) == P0.apply(rule), pseudo ? 7 : 8, "g on (xy)_0 mismatch");
    }
  }
  if (pseudo) {
    for (const auto& x1 : b1)
      for (const auto& x0 : b0)
        require(F.apply(Ph.apply(m(x1, x0))) == m(H.apply(x1), x0) + m(x1, G.apply(x0)), 8,
                "f(x1 x0) mismatch");
  }
  for (const auto& xh : bh) {
    for (const auto& x1 : b1)
      require(F.apply(m(x1, xh)) == m(H.apply(x1), xh) + m(x1, F.apply(xh)), 9, "f(x1 x) mismatch");
    for (const auto& x0 : b0)
      require(F.apply(m(x0, xh)) == m(G.apply(x0), xh) + m(x0, F.apply(xh)), 10, "f(x0 x) mismatch");
  }
}

}  // namespace

DerivationQuadruplet quadruplet_decompose(const Algebra& a, const PeirceWitness& w,
                                          const DerivationMatrix& d) {
  if (d.dim() != a.dim()) throw Error("DimensionMismatch", "derivation does not match algebra");
  const Frame fr = make_frame(a, w);
  const Element de = d(fr.e);
  require(fr.half.space.contains(de), 1, "d(e) = " + to_string(de) + " is not in A_e(1/2)");

  const auto de_times = [&](const Vector& x) { return mul(a, de, x); };
  DerivationQuadruplet q;
  q.de = de;
  q.h = component_map(fr.one, 2, "h", [&](const Vector& x) {
    return d(x) - Rational(2) * de_times(x);
  });
  q.f = component_map(fr.half, 3, "f", [&](const Vector& x) {
    const Vector p = de_times(x);
    return d(x) - Rational(2) * fr.zero.proj.apply(p) + Rational(2) * fr.one.proj.apply(p);
  });
  q.g = component_map(fr.zero, 4, "g", [&](const Vector& x) {
    return d(x) + Rational(2) * de_times(x);
  });
  audit_conditions(a, fr, fr.one.extend(q.h), fr.half.extend(q.f), fr.zero.extend(q.g));
  return q;
}

DerivationMatrix quadruplet_reconstruct(const Algebra& a, const PeirceWitness& w,
                                        const DerivationQuadruplet& q) {
  const Frame fr = make_frame(a, w);
  const auto square = [](const Matrix& m, std::size_t k) { return m.rows() == k && m.cols() == k; };
  if (q.de.size() != a.dim() || !square(q.h, fr.one.dim()) || !square(q.f, fr.half.dim()) ||
      !square(q.g, fr.zero.dim()))
    throw Error("DimensionMismatch", "quadruplet does not match the Peirce decomposition");
  require(fr.half.space.contains(q.de), 1, "d(e) = " + to_string(q.de) + " is not in A_e(1/2)");

  const Matrix L = left_mult_matrix(a, q.de);
  const Matrix& P1 = fr.one.proj;
  const Matrix& Ph = fr.half.proj;
  const Matrix& P0 = fr.zero.proj;
  const Rational two(2);
  Matrix dm = fr.one.extend(q.h) + fr.half.extend(q.f) + fr.zero.extend(q.g);
  dm = dm + two * (L * P1) + two * (P0 * L * Ph) - two * (P1 * L * Ph) - two * (L * P0);
  return DerivationMatrix::make(a, std::move(dm));
}

bool check_dt_zero(const Algebra& a, const PseudoIdempotentWitness& w, const DerivationMatrix& d) {
  if (!is_zero(d(w.t))) return false;
  return peirce_decompose(a, w.e).compHalf.contains(d(w.e));
}

bool is_d_invariant(const Subspace& s, const DerivationMatrix& d) {
  for (const Vector& v : s.basis_vectors())
    if (!s.contains(d(v))) return false;
  return true;
}

bool is_d_invariant(const Ideal& ideal, const DerivationMatrix& d) {
  return is_d_invariant(ideal.subspace(), d);
}

bool is_characteristic(const DerivationSpace& space, const Ideal& ideal) {
  for (const auto& d : space.basis())
    if (!is_d_invariant(ideal, d)) return false;
  return true;
}

bool is_characteristic(const Algebra& a, const Ideal& ideal) {
  return is_characteristic(derivation_space(a), ideal);
}

}  // namespace lta
