#pragma once

#include "coxsupport/cyclotomic.hpp"

#include <utility>
#include <vector>

namespace coxsupport {

using Matrix = std::vector<std::vector<CycloNum>>;

/// Rank by fraction-free (Bareiss) elimination: every division is exact in the
/// coefficient ring, so intermediate entries stay polynomial in the input.
int exact_rank(Matrix m);

/// Determinant of a square matrix by Bareiss elimination.
CycloNum determinant(Matrix m);

/// Basis of the right kernel {v : m v = 0}, from the reduced row echelon form.
std::vector<std::vector<CycloNum>> nullspace(const Matrix& m);

Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<CycloNum> multiply(const Matrix& a, const std::vector<CycloNum>& v);
/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

}  // namespace coxsupport
