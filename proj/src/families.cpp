#include "lta/families.hpp"

#include "lta/error.hpp"

namespace lta {

namespace {

using Kind = FamilySpec::Kind;

struct KindInfo {
  Kind kind;
  const char* name;
  const char* anchor;
};

constexpr KindInfo kKinds[] = {
    {Kind::OddGametic, "odd-gametic", "MainThm-1(i)"},
    {Kind::OddPseudo, "odd-pseudo", "MainThm-1(i')"},
    {Kind::EvenGametic, "even-gametic", "MainThm-2(i)"},
    {Kind::EvenPseudo, "even-pseudo", "MainThm-2(i')"},
    {Kind::BernsteinNormal, "bernstein-normal", "MainThm-2(ii)"},
    {Kind::TrainRank3Type, "train-rank3", "MainThm-2(iii)"},
};

const KindInfo& info(Kind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw Error("UnknownFamily", "no parameterised family for this kind");
}

bool is_odd(Kind k) { return k == Kind::OddGametic || k == Kind::OddPseudo; }

std::size_t family_dim(const FamilySpec& s) { return is_odd(s.kind) ? 2 * s.p + 2 : 2 * s.p + 1; }

// e0^2 = e0 (+ e_n), e0 ei = ei/2 for 1 <= i < n, e0 e_n = lambda e_n.
TableBuilder base_table(std::size_t dim, const Rational& lambda, bool pseudo) {
  TableBuilder b(dim);
  const std::size_t n = dim - 1;
  b.add(0, 0, 0, 1);
  if (pseudo) b.add(0, 0, n, 1);
  for (std::size_t i = 1; i < n; ++i) b.add(0, i, i, Rational(1, 2));
  if (sgn(lambda) != 0) b.add(0, n, n, lambda);
  return b;
}

// ei e_{n-i} = sign(i)/2 e_n for 1 <= i <= n/2, the middle square written once.
void add_antidiagonal(TableBuilder& b, std::size_t n, int sign_at_one) {
  int sign = sign_at_one;
  for (std::size_t i = 1; 2 * i <= n; ++i, sign = -sign) b.add(i, n - i, n, Rational(sign, 2));
}

Algebra low_dim_table(const std::string& tag) {
  const Rational half(1, 2);
  if (tag == "n1-idem") return TableBuilder(2).add(0, 0, 0, 1).add(0, 1, 1, half).build();
  if (tag == "n1-pseudo")
    return TableBuilder(2).add(0, 0, 0, 1).add(0, 0, 1, 1).add(0, 1, 1, half).build();
  if (tag == "n2-lam0")
    return TableBuilder(3).add(0, 0, 0, 1).add(0, 1, 1, half).add(1, 1, 2, half).build();
  if (tag == "n2-lamhalf-idem")
    return TableBuilder(3).add(0, 0, 0, 1).add(0, 1, 1, half).add(0, 2, 2, half).build();
  if (tag == "n2-lamhalf-pseudo")
    return TableBuilder(3)
        .add(0, 0, 0, 1).add(0, 0, 2, 1).add(0, 1, 1, half).add(0, 2, 2, half).build();
  if (tag == "n2-lam1")
    return TableBuilder(3)
        .add(0, 0, 0, 1).add(0, 1, 1, half).add(0, 2, 2, 1).add(1, 1, 2, -half).build();
  if (tag == "n3-idem" || tag == "n3-pseudo") {
    TableBuilder b(4);
    b.add(0, 0, 0, 1).add(0, 1, 1, half).add(0, 2, 2, half).add(0, 3, 3, half);
    if (tag == "n3-pseudo") b.add(0, 0, 3, 1);
    return b.build();
  }
  if (tag == "n4-lam0")
    return TableBuilder(5)
        .add(0, 0, 0, 1).add(0, 1, 1, half).add(0, 2, 2, half).add(0, 3, 3, half)
        .add(1, 3, 4, half).add(2, 2, 4, -half).build();
  if (tag == "n4-lamhalf-idem" || tag == "n4-lamhalf-pseudo") {
    TableBuilder b(5);
    b.add(0, 0, 0, 1).add(0, 1, 1, half).add(0, 2, 2, half).add(0, 3, 3, half).add(0, 4, 4, half);
    if (tag == "n4-lamhalf-pseudo") b.add(0, 0, 4, 1);
    return b.build();
  }
  if (tag == "n4-lam1")
    return TableBuilder(5)
        .add(0, 0, 0, 1).add(0, 1, 1, half).add(0, 2, 2, half).add(0, 3, 3, half)
        .add(0, 4, 4, 1).add(1, 3, 4, -half).add(2, 2, 4, half).build();
  throw Error("UnknownFamily", "unknown low-dimensional table '" + tag + "'");
}

}  // namespace

std::string FamilySpec::name() const { return kind == Kind::LowDim ? tag : info(kind).name; }

std::string FamilySpec::anchor() const {
  if (kind == Kind::LowDim) return "LowDim " + tag;
  return std::string(info(kind).anchor) + " p=" + std::to_string(p);
}

const std::vector<FamilySpec::Kind>& general_family_kinds() {
  static const std::vector<Kind> kinds = [] {
    std::vector<Kind> out;
    for (const auto& i : kKinds) out.push_back(i.kind);
    return out;
  }();
  return kinds;
}

const std::vector<std::string>& low_dim_tags() {
  static const std::vector<std::string> tags = {
      "n1-idem", "n1-pseudo", "n2-lam0", "n2-lamhalf-idem", "n2-lamhalf-pseudo", "n2-lam1",
      "n3-idem", "n3-pseudo", "n4-lam0", "n4-lamhalf-idem", "n4-lamhalf-pseudo", "n4-lam1"};
  return tags;
}

FamilySpec parse_family(const std::string& name, unsigned p) {
  for (const auto& i : kKinds) {
    if (name != i.name) continue;
    if (p == 0) throw Error("InvalidParameter", "family '" + name + "' needs p >= 1");
    return FamilySpec::make(i.kind, p);
  }
  for (const auto& tag : low_dim_tags())
    if (name == tag) return FamilySpec::low_dim(tag);
  throw Error("UnknownFamily", "unknown family '" + name + "'");
}

Algebra make_family(const FamilySpec& spec) {
  if (spec.kind == Kind::LowDim) return low_dim_table(spec.tag);
  if (spec.p == 0) throw Error("InvalidParameter", "p must be at least 1");
  const std::size_t dim = family_dim(spec);
  const std::size_t n = dim - 1;
  switch (spec.kind) {
    case Kind::OddGametic:
    case Kind::EvenGametic:
      return base_table(dim, Rational(1, 2), false).build();
    case Kind::OddPseudo:
    case Kind::EvenPseudo:
      return base_table(dim, Rational(1, 2), true).build();
    case Kind::BernsteinNormal: {
      TableBuilder b = base_table(dim, 0, false);
      add_antidiagonal(b, n, 1);
      return b.build();
    }
    case Kind::TrainRank3Type: {
      TableBuilder b = base_table(dim, 1, false);
      add_antidiagonal(b, n, -1);
      return b.build();
    }
    case Kind::LowDim:
      break;
  }
  throw Error("UnknownFamily", "unhandled family kind");
}

FamilyInstance family_instance(const FamilySpec& spec) {
  Algebra a = make_family(spec);
  const std::size_t n = a.dim() - 1;
  FamilyInstance fi{spec, a, false, a.basis_element(0), std::nullopt,
                    a.basis_element(0), IdentitySpec::train_rank2(), true, Rational(1, 2)};

  enum class Shape { Gametic, Pseudo, Bernstein, Rank3 } shape = Shape::Gametic;
  switch (spec.kind) {
    case Kind::OddPseudo:
    case Kind::EvenPseudo:
      shape = Shape::Pseudo;
      break;
    case Kind::BernsteinNormal:
      shape = Shape::Bernstein;
      break;
    case Kind::TrainRank3Type:
      shape = Shape::Rank3;
      break;
    case Kind::LowDim:
      if (spec.tag.find("pseudo") != std::string::npos) shape = Shape::Pseudo;
      else if (spec.tag.ends_with("lam0")) shape = Shape::Bernstein;
      else if (spec.tag.ends_with("lam1")) shape = Shape::Rank3;
      break;
    default:
      break;
  }
  switch (shape) {
    case Shape::Gametic:
      break;
    case Shape::Pseudo:
      fi.pseudo = true;
      fi.t = a.basis_element(n);
      fi.train = IdentitySpec::train_rank3(Rational(-3, 2), Rational(1, 2));
      fi.jordan = false;
      break;
    case Shape::Bernstein:
      fi.train = IdentitySpec::train_rank3(-1, 0);
      fi.lambda_n = 0;
      break;
    case Shape::Rank3:
      fi.train = IdentitySpec::train_rank3(-2, 1);
      fi.lambda_n = 1;
      break;
  }
  return fi;
}

Matrix shift_matrix(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t j = 0; j + 1 < dim; ++j) m(j + 1, j) = 1;
  return m;
}

}  // namespace lta

namespace lta {

Algebra pseudo_two_blocks() {
  const Rational half(1, 2);
  return TableBuilder(4, {"e", "t", "u", "r"})
      .add(0, 0, 0, 1).add(0, 0, 1, 1).add(2, 2, 2, 1).add(2, 2, 3, 1)
      .add(0, 1, 1, half).add(2, 3, 3, half)
      .build();
}

Algebra pseudo_with_v() {
  const Rational half(1, 2);
  return TableBuilder(4, {"e", "t1", "t2", "v"})
      .add(0, 0, 0, 1).add(0, 0, 1, 1).add(0, 1, 1, half).add(0, 2, 2, half)
      .add(0, 3, 3, 1).add(3, 1, 2, 1)
      .build();
}

Algebra gametic_natural(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("a" + std::to_string(i));
  TableBuilder b(m, names);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      b.add(i, j, i, Rational(1, 2));
      b.add(i, j, j, Rational(1, 2));
    }
  return b.build();
}

}  // namespace lta
