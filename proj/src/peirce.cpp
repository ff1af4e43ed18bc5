#include "lta/peirce.hpp"

#include <functional>

namespace lta {

const Element& witness_element(const PeirceWitness& w) {
  return std::visit([](const auto& v) -> const Element& { return v.e; }, w);
}

IdempotentWitness verify_idempotent(const Algebra& a, const Element& e) {
  if (e.size() != a.dim()) throw Error("DimensionMismatch", "element does not match algebra");
  if (is_zero(e)) throw WitnessError("ZeroElement", "the zero element is not an idempotent");
  const Element residual = mul(a, e, e) - e;
  if (!is_zero(residual))
    throw WitnessError("NotIdempotent", "e^2 - e = " + to_string(residual), residual);
  return IdempotentWitness{e};
}

PseudoIdempotentWitness verify_pseudo_idempotent(const Algebra& a, const Element& e) {
  if (e.size() != a.dim()) throw Error("DimensionMismatch", "element does not match algebra");
  if (is_zero(e)) throw WitnessError("ZeroElement", "the zero element is not a pseudo-idempotent");
  const Element t = mul(a, e, e) - e;
  if (is_zero(t)) throw WitnessError("TIsZero", "e^2 = e, so e is an idempotent");
  if (mul(a, e, t) != Rational(1, 2) * t)
    throw WitnessError("HalfConditionFails", "e t != t/2 for t = " + to_string(t), t);
  if (!is_zero(mul(a, t, t)))
    throw WitnessError("TSquaredNonzero", "t^2 != 0 for t = " + to_string(t), t);
  if (!associator_ideal(a).subspace().contains(t))
    throw WitnessError("TNotInL", "t = " + to_string(t) + " is outside the associator ideal", t);
  return PseudoIdempotentWitness{e, t};
}

const char* to_string(PeirceEigen eig) {
  switch (eig) {
    case PeirceEigen::One:
      return "1";
    case PeirceEigen::Half:
      return "1/2";
    case PeirceEigen::Zero:
      return "0";
  }
  return "?";
}

const Subspace& PeirceDecomposition::component(PeirceEigen eig) const {
  switch (eig) {
    case PeirceEigen::One:
      return comp1;
    case PeirceEigen::Half:
      return compHalf;
    case PeirceEigen::Zero:
      break;
  }
  return comp0;
}

const Matrix& PeirceDecomposition::projection(PeirceEigen eig) const {
  switch (eig) {
    case PeirceEigen::One:
      return proj1;
    case PeirceEigen::Half:
      return projHalf;
    case PeirceEigen::Zero:
      break;
  }
  return proj0;
}

PeirceDecomposition peirce_decompose(const Algebra& a, const Element& e) {
  const std::size_t n = a.dim();
  const Matrix l = left_mult_matrix(a, e);
  const Matrix id = Matrix::identity(n);
  PeirceDecomposition pd{kernel(l - id), kernel(l - Rational(1, 2) * id), kernel(l), {}, {}, {}, {}};
  const std::size_t total = pd.comp1.dim() + pd.compHalf.dim() + pd.comp0.dim();
  if (total != n) {
    throw Error("NotDecomposable", "eigenspaces of L_e for 1, 1/2, 0 span only " +
                                       std::to_string(total) + " of " + std::to_string(n) +
                                       " dimensions");
  }
  std::vector<Vector> cols;
  for (const Subspace* s : {&pd.comp1, &pd.compHalf, &pd.comp0})
    for (auto& v : s->basis_vectors()) cols.push_back(std::move(v));
  pd.change = Matrix::from_columns(cols, n);
  const Matrix inv = *inverse(pd.change);
  std::size_t offset = 0;
  for (PeirceEigen eig : {PeirceEigen::One, PeirceEigen::Half, PeirceEigen::Zero}) {
    const std::size_t k = pd.component(eig).dim();
    Matrix block(n, n);
    for (std::size_t r = offset; r < offset + k; ++r)
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(pd.change(i, r)) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) block(i, j) += pd.change(i, r) * inv(r, j);
      }
    offset += k;
    switch (eig) {
      case PeirceEigen::One:
        pd.proj1 = std::move(block);
        break;
      case PeirceEigen::Half:
        pd.projHalf = std::move(block);
        break;
      case PeirceEigen::Zero:
        pd.proj0 = std::move(block);
        break;
    }
  }
  return pd;
}

bool PeirceRelationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

bool PeirceRelationReport::item_passed(const std::string& item) const {
  for (const auto& c : checks)
    if (c.item == item && !c.passed) return false;
  return true;
}

namespace {

/// Generic elements drawn from Peirce components, each with its own block
/// of fresh variables.
class Generics {
 public:
  Generics(const Algebra& a, const PeirceDecomposition& pd) : a_(a), pd_(pd) {}

  PolyVector fresh(PeirceEigen eig) {
    const Subspace& s = pd_.component(eig);
    PolyVector v = generic_in_span(a_.dim(), s.basis_vectors(), next_var_);
    next_var_ += static_cast<std::uint32_t>(s.dim());
    return v;
  }
  PolyVector m(const PolyVector& x, const PolyVector& y) const { return mul_generic(a_, x, y); }
  PolyVector p(PeirceEigen eig, const PolyVector& v) const { return apply(pd_.projection(eig), v); }

 private:
  const Algebra& a_;
  const PeirceDecomposition& pd_;
  std::uint32_t next_var_ = 0;
};

class Auditor {
 public:
  Auditor(const Algebra& a, const PeirceDecomposition& pd, PeirceRelationReport& report)
      : a_(a), pd_(pd), report_(report) {}

  void contained(const std::string& item, const std::string& text, const Subspace& lhs,
                 const Subspace& rhs) {
    report_.checks.push_back({item, text, rhs.contains(lhs)});
  }
  void product_in(const std::string& item, const std::string& text, const Subspace& s,
                  const Subspace& t, const Subspace& target) {
    contained(item, text, product_space(a_, s, t), target);
  }
  void product_zero(const std::string& item, const std::string& text, const Subspace& s,
                    const Subspace& t) {
    report_.checks.push_back({item, text, product_space(a_, s, t).is_zero()});
  }
  /// `relation` builds lhs - rhs from a fresh set of generic elements.
  void vanishes(const std::string& item, const std::string& text,
                const std::function<PolyVector(Generics&)>& relation) {
    Generics g(a_, pd_);
    report_.checks.push_back({item, text, is_zero_vector(relation(g))});
  }

 private:
  const Algebra& a_;
  const PeirceDecomposition& pd_;
  PeirceRelationReport& report_;
};

constexpr auto One = PeirceEigen::One;
constexpr auto Half = PeirceEigen::Half;
constexpr auto Zero = PeirceEigen::Zero;

// Relations shared by both cases, parameterised by lambda in {0, 1}.
PolyVector derivation_like(Generics& g, PeirceEigen lam) {
  const auto x = g.fresh(lam), y = g.fresh(lam), h = g.fresh(Half);
  return g.m(g.m(x, y), h) - g.m(x, g.m(y, h)) - g.m(y, g.m(x, h));
}

PolyVector mixed_commute(Generics& g) {
  const auto x0 = g.fresh(Zero), y1 = g.fresh(One), h = g.fresh(Half);
  return g.m(x0, g.m(y1, h)) - g.m(y1, g.m(x0, h));
}

PolyVector projected_jordan(Generics& g, PeirceEigen lam) {
  const auto x = g.fresh(lam), xh = g.fresh(Half), ah = g.fresh(Half);
  return g.p(lam, g.m(x, g.m(xh, ah)) - g.m(g.m(x, xh), ah) - g.m(g.m(x, ah), xh));
}

PolyVector swap_halves(Generics& g, PeirceEigen lam, PeirceEigen target) {
  const auto x = g.fresh(lam), xh = g.fresh(Half), yh = g.fresh(Half);
  return g.p(target, g.m(g.m(x, xh), yh) - g.m(g.m(x, yh), xh));
}

PolyVector cyclic_half(Generics& g) {
  const auto x = g.fresh(Half), y = g.fresh(Half), z = g.fresh(Half);
  const auto xy = g.m(x, y), yz = g.m(y, z), zx = g.m(z, x);
  const auto zero_side = g.m(g.p(Zero, xy), z) + g.m(g.p(Zero, yz), x) + g.m(g.p(Zero, zx), y);
  const auto one_side = g.m(g.p(One, xy), z) + g.m(g.p(One, yz), x) + g.m(g.p(One, zx), y);
  return zero_side - one_side;
}

void idempotent_relations(const Algebra& a, const PeirceDecomposition& pd, Auditor& au) {
  const Subspace& A1 = pd.comp1;
  const Subspace& Ah = pd.compHalf;
  const Subspace& A0 = pd.comp0;
  au.product_in("(i)", "A(1/2)A(1/2) in A(1)+A(0)", Ah, Ah, sum(A1, A0));
  au.product_in("(i)", "A(1)A(1) in A(1)", A1, A1, A1);
  au.product_in("(i)", "A(0)A(0) in A(0)", A0, A0, A0);
  au.product_in("(i)", "A(1)A(1/2) in A(1/2)", A1, Ah, Ah);
  au.product_in("(i)", "A(0)A(1/2) in A(1/2)", A0, Ah, Ah);
  au.product_zero("(i)", "A(1)A(0) = 0", A1, A0);
  (void)a;

  au.vanishes("(ii)", "(x1y1)a = x1(y1a) + y1(x1a)", [](Generics& g) { return derivation_like(g, One); });
  au.vanishes("(ii)", "(x0y0)a = x0(y0a) + y0(x0a)", [](Generics& g) { return derivation_like(g, Zero); });
  au.vanishes("(iii)", "[x1(xa)]_1 = [(x1x)a + (x1a)x]_1",
              [](Generics& g) { return projected_jordan(g, One); });
  au.vanishes("(iii)", "[x0(xa)]_0 = [(x0x)a + (x0a)x]_0",
              [](Generics& g) { return projected_jordan(g, Zero); });
  au.vanishes("(iv)", "[(x1x)y]_0 = [(x1y)x]_0", [](Generics& g) { return swap_halves(g, One, Zero); });
  au.vanishes("(iv)", "[(x0x)y]_1 = [(x0y)x]_1", [](Generics& g) { return swap_halves(g, Zero, One); });
  au.vanishes("(v)", "x0(y1a) = y1(x0a)", mixed_commute);
  au.vanishes("(vi)", "x(x^2)_1 = x(x^2)_0", [](Generics& g) {
    const auto x = g.fresh(Half);
    const auto x2 = g.m(x, x);
    return g.m(x, g.p(One, x2)) - g.m(x, g.p(Zero, x2));
  });
  au.vanishes("(vi)", "x(x^2)_1 = x^3/2", [](Generics& g) {
    const auto x = g.fresh(Half);
    const auto x2 = g.m(x, x);
    return g.m(x, g.p(One, x2)) - Rational(1, 2) * g.m(x2, x);
  });
  au.vanishes("(vii)", "cyclic (xy)_0 z = cyclic (xy)_1 z", cyclic_half);
}

void pseudo_relations(const Algebra& a, const PeirceDecomposition& pd, const Element& t,
                      Auditor& au) {
  const Subspace& A1 = pd.comp1;
  const Subspace& Ah = pd.compHalf;
  const Subspace& A0 = pd.comp0;
  const Ideal assoc = associator_ideal(a);
  const Subspace& L = assoc.subspace();
  const Subspace L1 = intersect(L, A1);
  const Subspace Lh = intersect(L, Ah);
  const Subspace L0 = intersect(L, A0);

  au.product_in("(i)", "A(0)L(1/2) in L(1/2)", A0, Lh, Lh);
  au.product_in("(i)", "A(1)L(1/2) in L(1/2)", A1, Lh, Lh);
  au.product_in("(i)", "A(1)L(1) in L(1)", A1, L1, L1);
  au.product_in("(i)", "A(0)L(0) in L(0)", A0, L0, L0);
  au.product_zero("(i)", "A(0)L(1) = 0", A0, L1);
  au.product_zero("(i)", "A(1)L(0) = 0", A1, L0);
  au.product_zero("(i)", "A(1/2)L(0) = 0", Ah, L0);
  au.product_zero("(i)", "A(1/2)L(1) = 0", Ah, L1);
  au.product_zero("(i)", "A(1/2)L(1/2) = 0", Ah, Lh);

  au.product_in("(ii)", "A(1)A(0) in L(1/2)", A1, A0, Lh);
  au.product_in("(ii)", "A(0)A(1/2) in A(1/2)", A0, Ah, Ah);
  au.product_in("(ii)", "A(1)A(1/2) in A(1/2)", A1, Ah, Ah);
  au.product_in("(ii)", "A(0)A(0) in A(0)+L(1/2)", A0, A0, sum(A0, Lh));
  au.product_in("(ii)", "A(1)A(1) in A(1)+L(1/2)", A1, A1, sum(A1, Lh));
  au.product_in("(ii)", "A(1/2)A(1/2) in A(1)+A(0)", Ah, Ah, sum(A1, A0));

  const PolyVector tc = constant_vector(t);
  struct Pair {
    PeirceEigen x, y;
    const char* tag;
  };
  for (const Pair& pr : {Pair{Zero, Zero, "x0y0"}, Pair{One, One, "x1y1"}, Pair{Zero, One, "x0y1"}}) {
    const std::string tag = pr.tag;
    au.vanishes("(iii)", "(" + tag + ")_1/2 = 4(xt)y", [&](Generics& g) {
      const auto x = g.fresh(pr.x), y = g.fresh(pr.y);
      return g.p(Half, g.m(x, y)) - Rational(4) * g.m(g.m(x, tc), y);
    });
    au.vanishes("(iii)", "(" + tag + ")_1/2 = 4(yt)x", [&](Generics& g) {
      const auto x = g.fresh(pr.x), y = g.fresh(pr.y);
      return g.p(Half, g.m(x, y)) - Rational(4) * g.m(g.m(y, tc), x);
    });
  }
  au.vanishes("(iv)", "(x1y1)a = x1(y1a) + y1(x1a)", [](Generics& g) { return derivation_like(g, One); });
  au.vanishes("(v)", "(x0y0)a = x0(y0a) + y0(x0a)", [](Generics& g) { return derivation_like(g, Zero); });
  au.vanishes("(vi)", "x0(y1a) = y1(x0a)", mixed_commute);
  au.vanishes("(vii)", "[x0(xa)]_0 = [(x0x)a + (x0a)x]_0",
              [](Generics& g) { return projected_jordan(g, Zero); });
  au.vanishes("(viii)", "[x1(xa)]_1 = [(x1x)a + (x1a)x]_1",
              [](Generics& g) { return projected_jordan(g, One); });
  au.vanishes("(ix)", "[(x0x)y]_1 = [(x0y)x]_1", [](Generics& g) { return swap_halves(g, Zero, One); });
  au.vanishes("(ix)", "[(x1x)y]_0 = [(x1y)x]_0", [](Generics& g) { return swap_halves(g, One, Zero); });
  au.vanishes("(x)", "cyclic (xy)_0 z = cyclic (xy)_1 z", cyclic_half);
}

}  // namespace

PeirceRelationReport verify_peirce_relations(const Algebra& a, const PeirceWitness& w) {
  const PeirceDecomposition pd = peirce_decompose(a, witness_element(w));
  PeirceRelationReport report;
  Auditor au(a, pd, report);
  if (const auto* p = std::get_if<PseudoIdempotentWitness>(&w)) {
    report.pseudo = true;
    pseudo_relations(a, pd, p->t, au);
  } else {
    idempotent_relations(a, pd, au);
  }
  return report;
}

Subspace half_annihilator(const Algebra& a, const PeirceDecomposition& pd) {
  return annihilator_in(a, pd.compHalf, pd.compHalf);
}

JIdeals j_ideals(const Algebra& a, const IdempotentWitness& w) {
  const PeirceDecomposition pd = peirce_decompose(a, w.e);
  Subspace j1 = annihilator_in(a, pd.comp1, pd.compHalf);
  Subspace j0 = annihilator_in(a, pd.comp0, pd.compHalf);
  Subspace j = sum(j1, j0);
  return JIdeals{Ideal::make(a, std::move(j1)), Ideal::make(a, std::move(j0)),
                 Ideal::make(a, std::move(j))};
}

HalfIdeal j_half_ideal(const Algebra& a, const PseudoIdempotentWitness& w) {
  const PeirceDecomposition pd = peirce_decompose(a, w.e);
  Ideal ideal = Ideal::make(a, half_annihilator(a, pd));
  if (!ideal.subspace().contains(w.t))
    throw Error("JHalfFailure", "t = " + to_string(w.t) + " lies outside J_e(1/2)");
  Quotient q = quotient(a, ideal);
  Element e_bar = q.projection.apply(w.e);
  verify_idempotent(q.algebra, e_bar);
  return HalfIdeal{std::move(ideal), std::move(q), std::move(e_bar)};
}

}  // namespace lta
