#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lta {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// Parses `p`, `-p` or `p/q`. Throws Error("BadRational") on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& q);

/// `(a, b, c)` with canonical rational formatting.
std::string to_string(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);

/// Sum of `coeffs[i] * vectors[i]`; `n` is the length of each vector.
Vector linear_combination(std::size_t n, const std::vector<Rational>& coeffs,
                          const std::vector<Vector>& vectors);

}  // namespace lta
