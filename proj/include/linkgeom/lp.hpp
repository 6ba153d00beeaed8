#pragma once

#include <optional>

#include "linkgeom/linalg.hpp"

namespace linkgeom {

struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Vector x;       // optimal vertex (kOptimal) or last feasible vertex (kUnbounded)
  Scalar value;   // objective at x
};

/// Exact two-phase primal simplex for
///   maximize c.x  subject to  a x = b, x >= 0
/// using Bland's smallest-index rule for both entering and leaving
/// variables, so it terminates without cycling.
LpResult maximize(const Matrix& a, const Vector& b, const Vector& c);

/// Phase one only: some x >= 0 with a x = b, or nothing.
std::optional<Vector> find_feasible(const Matrix& a, const Vector& b);

}  // namespace linkgeom
