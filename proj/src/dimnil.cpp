#include "lta/dimnil.hpp"

#include <random>

#include "lta/peirce.hpp"

namespace lta {

DimNilVerdict check_dim_nilpotent(const Algebra& a, const DerivationMatrix& d) {
  const std::size_t n = a.dim();
  if (n == 0 || d.dim() != n) return {false, 0};
  const Matrix below = power(d.matrix(), static_cast<unsigned>(n - 1));
  if (!(below * d.matrix()).is_zero()) return {false, n};
  if (below.is_zero()) return {false, n - 1};
  return {true, n};
}

AdaptedBasis adapted_basis(const Algebra& a, const DerivationMatrix& d,
                           const std::optional<Element>& start) {
  if (!check_dim_nilpotent(a, d).yes)
    throw Error("NotDimensionallyNilpotent", "d^dim = 0 with d^(dim-1) != 0 is required");
  const std::size_t n = a.dim();
  const Matrix top = power(d.matrix(), static_cast<unsigned>(n - 1));
  Element v;
  if (start) {
    if (start->size() != n) throw Error("DimensionMismatch", "start vector does not match algebra");
    if (is_zero(top.apply(*start)))
      throw Error("BadStartVector", "d^(dim-1) vanishes on " + to_string(*start));
    v = *start;
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(top.column(j))) {
        v = a.basis_element(j);
        break;
      }
    }
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(v);
    v = d(v);
  }
  Matrix change = Matrix::from_rows(rows, n);
  const Matrix columns = change.transpose();
  const auto inv = inverse(columns);
  if (!inv || *inv * d.matrix() * columns != shift_matrix(n))
    throw Error("NotDimensionallyNilpotent", "the iterated images are not a basis");
  Algebra adapted = change_basis(a, columns);
  return AdaptedBasis{std::move(change), d, std::move(adapted)};
}

namespace {

/// Derivations whose matrices vanish outside the given entry pattern.
std::vector<Matrix> restricted_basis(const DerivationSpace& space, bool lower) {
  const std::size_t n = space.algebra_dim();
  std::vector<Vector> pattern;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (lower ? r > c : r < c) pattern.push_back(unit_vector(n * n, r * n + c));
  const Subspace part = intersect(space.flattened(), Subspace::span(n * n, pattern));
  std::vector<Matrix> out;
  for (const Vector& v : part.basis_vectors()) out.push_back(unvectorize(v, n));
  return out;
}

}  // namespace

SearchResult search_dim_nilpotent(const Algebra& a, std::size_t budget, std::uint64_t seed) {
  SearchResult result;
  const std::size_t n = a.dim();
  const DerivationSpace space = derivation_space(a);
  const auto attempt = [&](const Matrix& m) {
    ++result.candidates_tried;
    DerivationMatrix d = DerivationMatrix::make(a, m);
    if (check_dim_nilpotent(a, d).yes) result.witness = std::move(d);
    return result.witness.has_value();
  };

  for (const auto& d : space.basis())
    if (attempt(d.matrix())) return result;
  if (n <= 1 || space.dim() == 0)
    if (attempt(Matrix(n, n))) return result;
  if (space.dim() == 0) return result;

  std::vector<std::vector<Matrix>> pools;
  for (bool lower : {true, false}) {
    auto pool = restricted_basis(space, lower);
    if (!pool.empty()) pools.push_back(std::move(pool));
  }
  std::vector<Matrix> full;
  for (const auto& d : space.basis()) full.push_back(d.matrix());
  pools.push_back(std::move(full));

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < budget; ++k) {
    const auto& pool = pools[k % pools.size()];
    Matrix m(n, n);
    for (const Matrix& b : pool) {
      const long c = static_cast<long>(rng() % 7) - 3;
      if (c != 0) m = m + Rational(c) * b;
    }
    if (attempt(m)) return result;
  }
  return result;
}

std::string ClaimLine::to_string() const {
  std::string s = anchor + " " + claim + (passed ? " OK" : " FAIL");
  if (!detail.empty()) s += " (" + detail + ")";
  return s;
}

bool TheoremReport::all_passed() const { return failures() == 0; }

std::size_t TheoremReport::failures() const {
  std::size_t k = 0;
  for (const auto& l : lines)
    if (!l.passed) ++k;
  return k;
}

namespace {

void audit_instance(const FamilyInstance& fi, TheoremReport& report) {
  const Algebra& a = fi.algebra;
  const std::size_t n = a.dim() - 1;
  const std::string anchor = fi.spec.anchor();
  const auto add = [&](std::string claim, bool ok, std::string detail = {}) {
    report.lines.push_back({anchor, std::move(claim), ok, std::move(detail)});
  };

  add("lie-triple", check_lie_triple(a).holds);

  const Matrix shift = shift_matrix(a.dim());
  const bool leibniz = satisfies_leibniz(a, shift);
  add("shift-derivation", leibniz);
  if (leibniz) {
    const DimNilVerdict v = check_dim_nilpotent(a, DerivationMatrix::make(a, shift));
    add("dim-nilpotent", v.yes, v.yes ? "" : "power " + std::to_string(v.power));
  } else {
    add("dim-nilpotent", false, "shift is not a derivation");
  }

  if (fi.pseudo) {
    std::string detail;
    bool ok = false;
    try {
      const PseudoIdempotentWitness w = verify_pseudo_idempotent(a, fi.e);
      ok = fi.t && w.t == *fi.t;
      if (!ok) detail = "t = " + to_string(w.t);
    } catch (const Error& err) {
      detail = err.kind();
    }
    add("pseudo-idempotent e0 t=e" + std::to_string(n), ok, detail);
  } else {
    std::string detail;
    bool ok = true;
    try {
      verify_idempotent(a, fi.e);
    } catch (const Error& err) {
      ok = false;
      detail = err.kind();
    }
    add("idempotent e0", ok, detail);
  }

  const bool jordan = check_jordan(a).holds;
  add(std::string("jordan=") + (fi.jordan ? "true" : "false"), jordan == fi.jordan);

  const WeightMap w = WeightMap::make(a, fi.weight);
  add("train " + fi.train.name(), check_train(a, w, fi.train).holds);

  bool annihilates = true;
  for (std::size_t k = 1; k <= n; ++k) annihilates = annihilates && is_zero(a.product(k, n));
  add("ek*en=0", annihilates);
  add("e0*en=" + to_string(fi.lambda_n) + "*en",
      a.product(0, n) == fi.lambda_n * a.basis_element(n));

  if (!fi.pseudo) add("min-poly", check_Le_minimal_poly(a, fi.e));
}

}  // namespace

TheoremReport verify_main_theorem(unsigned p_max) {
  if (p_max == 0) throw Error("InvalidParameter", "p-max must be at least 1");
  TheoremReport report;
  for (const auto kind : general_family_kinds())
    for (unsigned p = 1; p <= p_max; ++p) audit_instance(family_instance(FamilySpec::make(kind, p)), report);
  for (const auto& tag : low_dim_tags()) audit_instance(family_instance(FamilySpec::low_dim(tag)), report);
  return report;
}

}  // namespace lta
