#include "linkgeom/linking.hpp"

#include <array>

#include "linkgeom/errors.hpp"

namespace linkgeom {
namespace {

using Vec3 = std::array<Scalar, 3>;

Vec3 vec3(const Point& p) { return {p[0], p[1], p[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

void require_disjoint_triangles(const Configuration& cfg, const SimplexRef& t1, const SimplexRef& t2) {
  if (cfg.dimension() != 3) throw GeometryError(ErrorCode::kDimensionMismatch, "triangle linking lives in R^3");
  if (t1.size() != 3 || t2.size() != 3) throw GeometryError(ErrorCode::kInvalidArgument, "expected two triangles");
  if (t1.shares_vertex_with(t2)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "triangles share a vertex", {t1.vertices(), t2.vertices()});
  }
}

// Counts facet crossings, reporting every degenerate contact as NOT_TRANSVERSAL.
std::size_t transversal_outline(const Configuration& cfg, const SimplexRef& boundary_of, const SimplexRef& target) {
  try {
    return outline_crossings(cfg, boundary_of, target);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::kSingularSystem) throw;
    throw GeometryError(ErrorCode::kNotTransversal, e.message(), e.simplices());
  }
}

std::size_t side_triangle_crossings(const Configuration& cfg, const BrokenLine& loop,
                                    const std::array<SimplexRef, 2>& triangles) {
  std::size_t count = 0;
  for (const auto& side : loop.sides()) {
    for (const auto& tri : triangles) {
      if (side.shares_vertex_with(tri)) {
        throw GeometryError(ErrorCode::kNotTransversal, "loops share a vertex", {side.vertices(), tri.vertices()});
      }
      const ContactResult r = [&] {
        try {
          return classify_contact(cfg, side, tri);
        } catch (const GeometryError& e) {
          if (e.code() != ErrorCode::kSingularSystem) throw;
          throw GeometryError(ErrorCode::kNotTransversal, e.message(), e.simplices());
        }
      }();
      if (r.kind == ContactKind::kBoundary) {
        throw GeometryError(ErrorCode::kNotTransversal, "loop side touches a triangle boundary",
                            {side.vertices(), tri.vertices()});
      }
      if (r.kind == ContactKind::kCrossing) ++count;
    }
  }
  return count;
}

void require_quad_loops(const Configuration& cfg, const BrokenLine& l1, const BrokenLine& l2) {
  if (cfg.dimension() != 3) throw GeometryError(ErrorCode::kDimensionMismatch, "loop linking lives in R^3");
  if (!l1.closed() || !l2.closed() || l1.vertices().size() != 4 || l2.vertices().size() != 4) {
    throw GeometryError(ErrorCode::kInvalidArgument, "expected two closed quadrangular broken lines");
  }
}

// Where the outline of `tri` crosses the plane through `plane` (normal n,
// base point w): the two crossing points, or nothing when the outline stays
// on one side.
std::optional<std::array<Vec3, 2>> outline_plane_points(const Configuration& cfg, const SimplexRef& tri,
                                                        const Vec3& n, const Vec3& w) {
  std::array<Vec3, 3> v = {vec3(cfg[tri[0]]), vec3(cfg[tri[1]]), vec3(cfg[tri[2]])};
  std::array<Scalar, 3> s;
  for (std::size_t i = 0; i < 3; ++i) {
    s[i] = dot(n, sub(v[i], w));
    if (s[i].is_zero()) {
      throw GeometryError(ErrorCode::kNotTransversal, "triangle vertex lies in the other plane", {tri.vertices()});
    }
  }
  std::array<Vec3, 2> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    if (s[i].sign() == s[j].sign()) continue;
    const Scalar t = s[i] / (s[i] - s[j]);
    const Vec3 dir = sub(v[j], v[i]);
    out[k++] = {v[i][0] + t * dir[0], v[i][1] + t * dir[1], v[i][2] + t * dir[2]};
  }
  if (k == 0) return std::nullopt;
  return out;
}

Vec3 normal_of(const Configuration& cfg, const SimplexRef& tri) {
  const Vec3 a = vec3(cfg[tri[0]]);
  return cross(sub(vec3(cfg[tri[1]]), a), sub(vec3(cfg[tri[2]]), a));
}

}  // namespace

LinkVerdict triangles_linked(const Configuration& cfg, const SimplexRef& t1, const SimplexRef& t2) {
  require_disjoint_triangles(cfg, t1, t2);
  LinkVerdict v;
  v.crossing_count = transversal_outline(cfg, t1, t2);
  v.linked = v.crossing_count == 1;
  return v;
}

LinkVerdict simplices_linked(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  const std::size_t n = cfg.dimension();
  if (n % 2 == 0) throw GeometryError(ErrorCode::kInvalidArgument, "simplex linking needs odd ambient dimension");
  if (s1.dim() != (n + 1) / 2 || s2.dim() != (n + 1) / 2) {
    throw GeometryError(ErrorCode::kInvalidArgument, "expected two (n+1)/2-simplices");
  }
  if (s1.shares_vertex_with(s2)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "simplices share a vertex", {s1.vertices(), s2.vertices()});
  }
  LinkVerdict v;
  v.crossing_count = transversal_outline(cfg, s1, s2);
  v.linked = v.crossing_count % 2 == 1;
  return v;
}

LinkVerdict quad_loops_linked(const Configuration& cfg, const BrokenLine& loop1, const BrokenLine& loop2) {
  require_quad_loops(cfg, loop1, loop2);
  const auto& q = loop2.vertices();
  LinkVerdict v;
  v.crossing_count = side_triangle_crossings(cfg, loop1, {SimplexRef{q[0], q[1], q[2]}, SimplexRef{q[0], q[3], q[2]}});
  v.linked = v.crossing_count % 2 == 1;
  return v;
}

LinkVerdict quad_loops_linked_other_diagonal(const Configuration& cfg, const BrokenLine& loop1,
                                             const BrokenLine& loop2) {
  require_quad_loops(cfg, loop1, loop2);
  const auto& q = loop2.vertices();
  LinkVerdict v;
  v.crossing_count = side_triangle_crossings(cfg, loop1, {SimplexRef{q[1], q[2], q[3]}, SimplexRef{q[1], q[0], q[3]}});
  v.linked = v.crossing_count % 2 == 1;
  return v;
}

std::size_t below_sides_count(const Configuration& cfg, std::size_t apex, const SimplexRef& edge,
                              const SimplexRef& opposite) {
  if (cfg.dimension() != 3) throw GeometryError(ErrorCode::kDimensionMismatch, "below_sides_count lives in R^3");
  if (edge.size() != 2 || opposite.size() != 3) {
    throw GeometryError(ErrorCode::kInvalidArgument, "expected an edge and a triangle");
  }
  const std::size_t p0 = edge[0];
  const std::size_t p1 = edge[1];
  std::size_t count = 0;
  for (const auto& side : opposite.facets()) {
    const std::size_t q0 = side[0];
    const std::size_t q1 = side[1];
    // The side must cross the plane of the fan triangle (apex, p0, p1) ...
    const int s0 = orientation(cfg, {apex, p0, p1, q0});
    const int s1 = orientation(cfg, {apex, p0, p1, q1});
    if (s0 == 0 || s1 == 0) {
      throw GeometryError(ErrorCode::kNotTransversal, "side endpoint in the plane of the fan triangle",
                          {{apex, p0, p1}, side.vertices()});
    }
    if (s0 == s1) continue;
    // ... inside it: the line q0q1 sees the three fan edges with equal turn.
    const int a = orientation(cfg, {q0, q1, apex, p0});
    const int b = orientation(cfg, {q0, q1, p0, p1});
    const int c = orientation(cfg, {q0, q1, p1, apex});
    if (a == 0 || b == 0 || c == 0) {
      throw GeometryError(ErrorCode::kNotTransversal, "side meets the fan triangle boundary",
                          {{apex, p0, p1}, side.vertices()});
    }
    if (a == b && b == c) ++count;
  }
  return count;
}

std::optional<std::size_t> extreme_point(const Configuration& cfg) {
  if (cfg.size() == 0) return std::nullopt;
  std::size_t best = 0;
  bool unique = true;
  for (std::size_t i = 1; i < cfg.size(); ++i) {
    const int c = (cfg[i][0] - cfg[best][0]).sign();
    if (c > 0) {
      best = i;
      unique = true;
    } else if (c == 0) {
      unique = false;
    }
  }
  if (!unique) return std::nullopt;
  return best;
}

Configuration project_from_extreme(const Configuration& cfg, std::size_t apex) {
  const std::size_t d = cfg.dimension();
  if (d < 2) throw GeometryError(ErrorCode::kDimensionMismatch, "projection needs d >= 2");
  if (apex >= cfg.size() || cfg.size() < 2) throw GeometryError(ErrorCode::kInvalidArgument, "apex index");
  const auto top = extreme_point(cfg);
  if (!top || *top != apex) {
    throw GeometryError(ErrorCode::kApexNotExtreme, "apex " + cfg.label(apex) +
                                                        " is not the unique point of maximal first coordinate");
  }
  const Scalar& a = cfg[apex][0];
  std::optional<Scalar> second;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (i != apex && (!second || cfg[i][0] > *second)) second = cfg[i][0];
  }
  const Scalar b = (a + *second) / Scalar(2);
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (i == apex) continue;
    const Scalar t = (a - b) / (a - cfg[i][0]);
    Point p;
    for (std::size_t c = 1; c < d; ++c) p.coords.push_back(cfg[apex][c] + t * (cfg[i][c] - cfg[apex][c]));
    pts.push_back(std::move(p));
    labels.push_back(cfg.label(i));
  }
  return Configuration(d - 1, std::move(pts), std::move(labels));
}

LinkVerdict line_alternation_linked(const Configuration& cfg, const SimplexRef& t1, const SimplexRef& t2) {
  require_disjoint_triangles(cfg, t1, t2);
  const Vec3 n1 = normal_of(cfg, t1);
  const Vec3 n2 = normal_of(cfg, t2);
  if (is_zero(n1) || is_zero(n2)) throw GeometryError(ErrorCode::kNotTransversal, "degenerate triangle");
  const Vec3 dir = cross(n1, n2);
  if (is_zero(dir)) throw GeometryError(ErrorCode::kParallelPlanes, "planes of the triangles are parallel");
  LinkVerdict v;
  v.method = LinkVerdict::Method::kLineAlternation;
  const auto first = outline_plane_points(cfg, t1, n2, vec3(cfg[t2[0]]));
  const auto second = outline_plane_points(cfg, t2, n1, vec3(cfg[t1[0]]));
  if (!first || !second) return v;  // one outline misses the common line
  Scalar lo = dot(dir, (*first)[0]);
  Scalar hi = dot(dir, (*first)[1]);
  if (hi < lo) std::swap(lo, hi);
  for (const auto& p : *second) {
    const Scalar t = dot(dir, p);
    if (t == lo || t == hi) {
      throw GeometryError(ErrorCode::kNotTransversal, "crossing points coincide on the common line",
                          {t1.vertices(), t2.vertices()});
    }
    if (lo < t && t < hi) ++v.crossing_count;
  }
  v.linked = v.crossing_count == 1;
  return v;
}

LinkVerdict plane_criterion_linked(const Configuration& cfg, const SimplexRef& t1, const SimplexRef& t2) {
  require_disjoint_triangles(cfg, t1, t2);
  const Vec3 n2 = normal_of(cfg, t2);
  if (is_zero(n2)) throw GeometryError(ErrorCode::kNotTransversal, "degenerate triangle");
  LinkVerdict v;
  v.method = LinkVerdict::Method::kPlaneCriterion;
  const auto pts = outline_plane_points(cfg, t1, n2, vec3(cfg[t2[0]]));
  if (!pts) return v;
  const std::array<Vec3, 3> w = {vec3(cfg[t2[0]]), vec3(cfg[t2[1]]), vec3(cfg[t2[2]])};
  for (const auto& x : *pts) {
    // Inside iff x is on the inner side of all three edges within the plane.
    int inside = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      const int s = dot(n2, cross(sub(w[(i + 1) % 3], w[i]), sub(x, w[i]))).sign();
      if (s == 0) {
        throw GeometryError(ErrorCode::kNotTransversal, "outline crosses the plane on a triangle side",
                            {t1.vertices(), t2.vertices()});
      }
      inside += s;
    }
    if (inside == 3) ++v.crossing_count;
  }
  v.linked = v.crossing_count == 1;
  return v;
}

}  // namespace linkgeom
