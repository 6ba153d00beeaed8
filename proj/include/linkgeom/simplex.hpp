#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linkgeom/kernel.hpp"

namespace linkgeom {

/// Sorted, distinct vertex indices into a Configuration.
class SimplexRef {
 public:
  SimplexRef() = default;
  SimplexRef(std::initializer_list<std::size_t> vertices);
  explicit SimplexRef(IndexSet vertices);

  const IndexSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t dim() const { return vertices_.size() - 1; }
  std::size_t operator[](std::size_t i) const { return vertices_[i]; }

  bool shares_vertex_with(const SimplexRef& other) const;
  /// Codimension-one faces, each omitting one vertex (in vertex order).
  std::vector<SimplexRef> facets() const;

  friend bool operator==(const SimplexRef& a, const SimplexRef& b) { return a.vertices_ == b.vertices_; }
  friend bool operator<(const SimplexRef& a, const SimplexRef& b) { return a.vertices_ < b.vertices_; }

 private:
  IndexSet vertices_;
};

/// Ordered vertex chain; a closed line has an implicit side from the last
/// vertex back to the first.
class BrokenLine {
 public:
  BrokenLine(IndexSet vertices, bool closed);

  const IndexSet& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::vector<SimplexRef> sides() const;

 private:
  IndexSet vertices_;
  bool closed_;
};

/// Collection of distinct triangles. The even-edge condition is not enforced
/// at construction so that candidate cycles can be inspected by is_two_cycle.
struct TwoCycle {
  std::vector<SimplexRef> triangles;
};

struct Transversal {
  Point point;
  std::vector<Scalar> alpha;  // barycentric coordinates in s1, vertex order
  std::vector<Scalar> beta;   // barycentric coordinates in s2
};

enum class ContactKind {
  kCrossing,  // unique common point, all barycentric coordinates positive
  kMiss,      // no common point of the affine hulls inside both closed simplices
  kBoundary,  // unique common point with some zero coordinate and none negative
};

struct ContactResult {
  ContactKind kind = ContactKind::kMiss;
  std::optional<Transversal> transversal;  // set for kCrossing and kBoundary
};

/// Solves sum a_i u_i = sum b_j v_j, sum a = sum b = 1 for complementary
/// (dim s1 + dim s2 = d), vertex-disjoint simplices. Throws SINGULAR_SYSTEM
/// when the affine hulls meet in more than one point; parallel hulls with no
/// common point are a miss.
ContactResult classify_contact(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2);

/// The relative-interior intersection point, or nothing.
std::optional<Transversal> transversal_point(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2);

/// Number of unordered pairs from `family` whose relative interiors meet.
/// Pairs sharing a vertex are skipped when `disjoint_only`, rejected otherwise.
/// Boundary contacts raise NOT_TRANSVERSAL with the pair attached.
std::size_t count_interior_crossings(const Configuration& cfg, const std::vector<SimplexRef>& family,
                                     bool disjoint_only);

/// Number of facets of `boundary_of` whose relative interior meets the
/// relative interior of `target`.
std::size_t outline_crossings(const Configuration& cfg, const SimplexRef& boundary_of, const SimplexRef& target);

struct TwoCycleCheck {
  bool ok = true;
  std::optional<SimplexRef> offending_edge;
};

/// Every edge of the listed triangles lies in an even number of them.
TwoCycleCheck is_two_cycle(const std::vector<SimplexRef>& triangles);

/// Crossings between the sides of a broken line and the triangles of a
/// 2-cycle in R^3. Any non-transversal contact raises NOT_TRANSVERSAL.
std::size_t line_body_crossings(const Configuration& cfg, const BrokenLine& line, const TwoCycle& cycle);

/// Crossings between the triangles of two 2-cycles in R^4.
std::size_t bodies_crossings_4d(const Configuration& cfg, const TwoCycle& c1, const TwoCycle& c2);

/// The four faces of a tetrahedron.
TwoCycle tetrahedron_surface(const SimplexRef& tet);

}  // namespace linkgeom
