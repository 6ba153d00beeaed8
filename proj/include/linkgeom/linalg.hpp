#pragma once

#include <cstddef>
#include <vector>

#include "linkgeom/scalar.hpp"

namespace linkgeom {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length

/// Scales every row by the positive lcm of its denominators so all entries
/// become integers of Z or Z[sqrt3]. Row scaling by positive factors keeps
/// solution sets and determinant signs.
Matrix clear_row_denominators(Matrix m);

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
Scalar determinant(Matrix m);
int determinant_sign(Matrix m);

struct LinearSolution {
  enum class Kind { kUnique, kNone, kInfinite };
  Kind kind = Kind::kNone;
  Vector x;  // set only for kUnique
};

/// Square system A x = b. Bareiss forward elimination with exact division;
/// singular systems are further classified as inconsistent or underdetermined.
LinearSolution solve(const Matrix& a, const Vector& b);

/// Reduced row echelon form over the field; `pivots` receives pivot columns.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);

/// Some nonzero x with m x = 0, or empty if the kernel is trivial. The free
/// variable of the first non-pivot column is set to 1.
Vector kernel_vector(const Matrix& m);

}  // namespace linkgeom
