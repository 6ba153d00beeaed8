#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linkgeom/simplex.hpp"

namespace linkgeom {

/// Abstract 2-hypergraph on vertices 0..vertex_count-1: triangular faces and
/// optional extra edges.
class Hypergraph2 {
 public:
  Hypergraph2(std::size_t vertex_count, std::vector<SimplexRef> faces, std::vector<SimplexRef> edges = {});

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<SimplexRef>& faces() const { return faces_; }
  const std::vector<SimplexRef>& edges() const { return edges_; }

  /// All 3-subsets of k vertices.
  static Hypergraph2 complete(std::size_t k);

 private:
  std::size_t vertex_count_;
  std::vector<SimplexRef> faces_;
  std::vector<SimplexRef> edges_;
};

struct PairClass {
  enum class Tag { kDisjoint, kCommonVertexOnly, kCommonEdgeOnly, kImproper };
  Tag tag = Tag::kDisjoint;
  std::optional<Point> witness;  // a common point outside the shared face, for kImproper
};

const char* pair_class_name(PairClass::Tag tag);

/// Exact classification of the intersection of two closed segments or
/// triangles. The shared face F is the set of common vertices; the
/// intersection equals conv(F) iff the largest total barycentric weight on
/// vertices outside F, over all common points, is zero. That maximum comes
/// from the exact simplex method.
PairClass classify_pair(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2);

/// Whether two vertex-disjoint closed simplices meet; uses transversal
/// shortcuts in general position and the exact LP otherwise.
bool closed_simplices_meet(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2);

struct EmbeddingCheck {
  bool embedded = true;
  std::optional<std::pair<SimplexRef, SimplexRef>> witness;
};

/// Every pair is disjoint, meets in a common vertex only, or in a common
/// side only.
EmbeddingCheck is_embedded(const Configuration& cfg, const std::vector<SimplexRef>& simplices);

/// Embeddedness of the image of the hypergraph's faces and extra edges under
/// vertex_map (hypergraph vertex -> configuration index, a bijection).
/// Throws DEGENERATE_FACE for a collinear image triangle.
EmbeddingCheck is_linear_realization(const Hypergraph2& hg, const Configuration& cfg,
                                     const std::vector<std::size_t>& vertex_map);

/// Identity vertex map.
EmbeddingCheck is_linear_realization(const Hypergraph2& hg, const Configuration& cfg);

/// In R^2: the open segment pq crosses the outline of `triangle` an odd
/// number of times.
bool separated_sides(const Configuration& cfg, std::size_t p, std::size_t q, const SimplexRef& triangle);

/// All segments (k = 2) or triangles (k = 3) on the configuration's points.
std::vector<SimplexRef> all_simplices(std::size_t n, std::size_t k);

}  // namespace linkgeom
