#pragma once

// Numeric identity evaluation written directly against the structure
// constants, sharing no code with the symbolic checker.

#include "lta/algebra.hpp"
#include "lta/identities.hpp"
#include "random.hpp"

namespace fx {

inline lta::Vector raw_mul(const lta::Algebra& a, const lta::Vector& x, const lta::Vector& y) {
  const std::size_t n = a.dim();
  lta::Vector z(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const lta::Rational w = x[i] * y[j];
      const lta::Vector& g = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) z[k] += w * g[k];
    }
  }
  return z;
}

inline lta::Vector raw_combo(std::initializer_list<std::pair<lta::Rational, lta::Vector>> terms) {
  lta::Vector out(terms.begin()->second.size(), 0);
  for (const auto& [c, v] : terms)
    for (std::size_t k = 0; k < v.size(); ++k) out[k] += c * v[k];
  return out;
}

/// Residual of the identity at one point; `w` is the weight (may be empty
/// for non-train identities).
inline lta::Vector raw_identity(const lta::Algebra& a, const lta::IdentitySpec& spec,
                                const lta::Vector& w, const lta::Vector& x, const lta::Vector& y) {
  using K = lta::IdentitySpec::Kind;
  const auto m = [&](const lta::Vector& u, const lta::Vector& v) { return raw_mul(a, u, v); };
  const lta::Vector x2 = m(x, x);
  switch (spec.kind) {
    case K::LieTriple:
      return raw_combo({{2, m(x, m(x, m(x, y)))}, {1, m(y, m(x2, x))}, {-3, m(x, m(y, x2))}});
    case K::Jordan:
      return raw_combo({{1, m(x2, m(y, x))}, {-1, m(m(x2, y), x)}});
    case K::TrainRank2:
    case K::TrainRank3: {
      lta::Rational wx = 0;
      for (std::size_t k = 0; k < x.size(); ++k) wx += w[k] * x[k];
      if (spec.kind == K::TrainRank2) return raw_combo({{1, x2}, {-wx, x}});
      return raw_combo({{1, m(x2, x)}, {spec.c2 * wx, x2}, {spec.c1 * wx * wx, x}});
    }
  }
  return {};
}

/// True when the identity vanishes at `samples` random points whose
/// coordinates have numerators and denominators in [-9, 9].
inline bool sampled_holds(const lta::Algebra& a, const lta::IdentitySpec& spec, const lta::Vector& w,
                          RandomRationals& rnd, int samples = 100) {
  for (int k = 0; k < samples; ++k) {
    const lta::Vector x = rnd.vector(a.dim()), y = rnd.vector(a.dim());
    if (!lta::is_zero(raw_identity(a, spec, w, x, y))) return false;
  }
  return true;
}

}  // namespace fx
