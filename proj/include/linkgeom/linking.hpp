#pragma once

#include <cstddef>

#include "linkgeom/simplex.hpp"

namespace linkgeom {

struct LinkVerdict {
  enum class Method { kDirect, kProjection, kLineAlternation, kPlaneCriterion };
  bool linked = false;
  std::size_t crossing_count = 0;
  Method method = Method::kDirect;
};

/// Mod-2 linking of vertex-disjoint triangles in R^3: the outline of t1
/// meets t2 in an odd number of points (at most one in general position).
LinkVerdict triangles_linked(const Configuration& cfg, const SimplexRef& t1, const SimplexRef& t2);

/// For odd n: s1, s2 of dimension (n+1)/2 are linked when an odd number of
/// facets of s1 cross s2 transversally.
LinkVerdict simplices_linked(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2);

/// Closed quadrangular loops ABCD, A'B'C'D' in R^3: linked when the sides of
/// the first cross the triangles A'B'C' and A'D'C' an odd number of times.
LinkVerdict quad_loops_linked(const Configuration& cfg, const BrokenLine& loop1, const BrokenLine& loop2);

/// Same criterion with the second loop split along the diagonal B'D'.
LinkVerdict quad_loops_linked_other_diagonal(const Configuration& cfg, const BrokenLine& loop1,
                                             const BrokenLine& loop2);

/// Number of sides q of `opposite` such that some half-line from the apex
/// meets the edge at P and q at Q != P with Q between the apex and P. Decided
/// with orientation predicates only.
std::size_t below_sides_count(const Configuration& cfg, std::size_t apex, const SimplexRef& edge,
                              const SimplexRef& opposite);

/// Central projection from the unique point with strictly largest first
/// coordinate a onto the hyperplane x1 = b, b = (a + next largest)/2. The
/// result keeps the last d-1 coordinates and the labels of the other points.
Configuration project_from_extreme(const Configuration& cfg, std::size_t apex);

/// Index of the point with strictly maximal first coordinate, if unique.
std::optional<std::size_t> extreme_point(const Configuration& cfg);

/// Linking decided along the common line of the two planes: the two
/// crossing points of each outline with the other plane must alternate.
/// Throws PARALLEL_PLANES for parallel planes.
LinkVerdict line_alternation_linked(const Configuration& cfg, const SimplexRef& t1, const SimplexRef& t2);

/// The plane of t2 meets the outline of t1 in two points; linked when
/// exactly one of them is inside t2.
LinkVerdict plane_criterion_linked(const Configuration& cfg, const SimplexRef& t1, const SimplexRef& t2);

}  // namespace linkgeom
