#pragma once

#include <string>
#include <string_view>

#include "lta/algebra.hpp"

namespace lta {

/// Line-oriented table format:
///   dim N
///   basis n0 ... n(N-1)          (optional)
///   prod bi bj = c bk + c bk ... (c is p, -p or p/q)
/// '#' starts a comment. Errors: MissingDim, UnknownBasisName, BadRational,
/// DuplicateProduct, SyntaxError.
Algebra parse_algebra(std::string_view text);

/// Canonical form: basis line always written, products in ascending (i, j)
/// order, terms in ascending k, joined by " + " with signed coefficients.
std::string serialize_algebra(const Algebra& a);

/// Linear combination such as "1/2 e1 - e2" or "e0 + 2 e3"; "0" is the
/// zero element.
Element parse_element(const Algebra& a, std::string_view text);

/// `dim N` followed by N rows of N rationals; column j holds d(e_j).
Matrix parse_matrix(std::string_view text);
std::string serialize_matrix(const Matrix& m);

/// Throws Error("IOError") when the file cannot be read or written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lta
