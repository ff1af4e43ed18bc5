#include "lta/identities.hpp"

#include <random>

#include "lta/error.hpp"

namespace lta {

std::string IdentitySpec::name() const {
  switch (kind) {
    case Kind::LieTriple:
      return "lie-triple";
    case Kind::Jordan:
      return "jordan";
    case Kind::TrainRank2:
      return "train2";
    case Kind::TrainRank3:
      return "train3:" + to_string(c2) + "," + to_string(c1);
  }
  return "unknown";
}

bool check_weight(const Algebra& a, const Vector& coeffs) {
  if (coeffs.size() != a.dim() || is_zero(coeffs)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      Rational w = 0;
      const Vector& p = a.product(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k) w += coeffs[k] * p[k];
      if (w != coeffs[i] * coeffs[j]) return false;
    }
  }
  return true;
}

WeightMap WeightMap::make(const Algebra& a, Vector coeffs) {
  if (!check_weight(a, coeffs))
    throw Error("NotAWeight", "linear form " + to_string(coeffs) + " is not a weight homomorphism");
  return WeightMap(std::move(coeffs));
}

Rational WeightMap::operator()(const Element& x) const {
  Rational w = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) w += coeffs_[i] * x.at(i);
  return w;
}

namespace {

const WeightMap& require_weight(const IdentitySpec& spec, const WeightMap* weight) {
  if (!spec.is_train()) throw Error("NotATrainIdentity", spec.name() + " is not a train equation");
  if (weight == nullptr) throw Error("MissingWeight", spec.name() + " needs a weight map");
  return *weight;
}

}  // namespace

PolyVector identity_residual(const Algebra& a, const IdentitySpec& spec, const WeightMap* weight) {
  const std::size_t n = a.dim();
  const PolyVector x = generic_element(n, 0);
  const PolyVector x2 = mul_generic(a, x, x);
  switch (spec.kind) {
    case IdentitySpec::Kind::LieTriple: {
      const PolyVector y = generic_element(n, 1);
      const PolyVector x3 = mul_generic(a, x2, x);
      const PolyVector lhs = Rational(2) * mul_generic(a, x, mul_generic(a, x, mul_generic(a, x, y)));
      return lhs + mul_generic(a, y, x3) - Rational(3) * mul_generic(a, x, mul_generic(a, y, x2));
    }
    case IdentitySpec::Kind::Jordan: {
      const PolyVector y = generic_element(n, 1);
      return mul_generic(a, x2, mul_generic(a, y, x)) - mul_generic(a, mul_generic(a, x2, y), x);
    }
    case IdentitySpec::Kind::TrainRank2:
    case IdentitySpec::Kind::TrainRank3: {
      const WeightMap& w = require_weight(spec, weight);
      Poly wx;
      for (std::size_t i = 0; i < n; ++i)
        wx.add_term(Monomial::variable(static_cast<std::uint32_t>(i)), w.coeffs()[i]);
      if (spec.kind == IdentitySpec::Kind::TrainRank2) return x2 - wx * x;
      const PolyVector x3 = mul_generic(a, x2, x);
      return x3 + (spec.c2 * wx) * x2 + (spec.c1 * (wx * wx)) * x;
    }
  }
  throw Error("NotATrainIdentity", "unknown identity kind");
}

Element evaluate_identity(const Algebra& a, const IdentitySpec& spec, const Element& x,
                          const Element& y, const WeightMap* weight) {
  const Element x2 = mul(a, x, x);
  switch (spec.kind) {
    case IdentitySpec::Kind::LieTriple: {
      const Element x3 = mul(a, x2, x);
      return Rational(2) * mul(a, x, mul(a, x, mul(a, x, y))) + mul(a, y, x3) -
             Rational(3) * mul(a, x, mul(a, y, x2));
    }
    case IdentitySpec::Kind::Jordan:
      return mul(a, x2, mul(a, y, x)) - mul(a, mul(a, x2, y), x);
    case IdentitySpec::Kind::TrainRank2:
    case IdentitySpec::Kind::TrainRank3: {
      const WeightMap& w = require_weight(spec, weight);
      const Rational wx = w(x);
      if (spec.kind == IdentitySpec::Kind::TrainRank2) return x2 - wx * x;
      return mul(a, x2, x) + (spec.c2 * wx) * x2 + (spec.c1 * wx * wx) * x;
    }
  }
  throw Error("NotATrainIdentity", "unknown identity kind");
}

namespace {

IdentityReport report_from_residual(const Algebra& a, const IdentitySpec& spec,
                                    const WeightMap* weight, const PolyVector& residual) {
  if (is_zero_vector(residual)) return {};
  const std::size_t n = a.dim();
  auto split = [n](const std::vector<Rational>& values) {
    Witness w{Vector(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n)),
              Vector(values.begin() + static_cast<std::ptrdiff_t>(n), values.end())};
    return w;
  };
  auto violates = [&](const Witness& w) {
    return !is_zero(evaluate_identity(a, spec, w.x, w.y, weight));
  };
  // First try: the variables of one surviving monomial set to 1.
  std::vector<Rational> values(2 * n, Rational(0));
  for (const auto& p : residual.coords) {
    if (p.is_zero()) continue;
    for (const auto& [var, exp] : p.terms().rbegin()->first.factors()) values.at(var) = 1;
    break;
  }
  Witness w = split(values);
  if (!violates(w)) {
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
      for (auto& v : values) {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = static_cast<long>(rng() % 9) + 1;
        v = Rational(num, den);
        v.canonicalize();
      }
      w = split(values);
      if (violates(w)) break;
    }
  }
  if (!violates(w)) throw Error("WitnessNotFound", "nonzero residual without a numeric violation");
  if (spec.is_train()) w.y = zero_vector(n);
  return IdentityReport{false, std::move(w)};
}

}  // namespace

IdentityReport check_identity(const Algebra& a, const IdentitySpec& spec, const WeightMap* weight) {
  if (spec.is_train()) require_weight(spec, weight);
  return report_from_residual(a, spec, weight, identity_residual(a, spec, weight));
}

IdentityReport check_lie_triple(const Algebra& a) {
  return check_identity(a, IdentitySpec::lie_triple());
}

IdentityReport check_jordan(const Algebra& a) { return check_identity(a, IdentitySpec::jordan()); }

IdentityReport check_train(const Algebra& a, const WeightMap& weight, const IdentitySpec& spec) {
  if (!spec.is_train()) throw Error("NotATrainIdentity", spec.name() + " is not a train equation");
  return check_identity(a, spec, &weight);
}

bool check_Le_minimal_poly(const Algebra& a, const Element& e) {
  if (mul(a, e, e) != e || is_zero(e))
    throw Error("NotIdempotent", to_string(e) + " is not an idempotent");
  const Matrix l = left_mult_matrix(a, e);
  const Matrix l2 = l * l;
  const Matrix l3 = l2 * l;
  return (Rational(2) * l3 - Rational(3) * l2 + l).is_zero();
}

}  // namespace lta
