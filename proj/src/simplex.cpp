#include "linkgeom/simplex.hpp"

#include <algorithm>
#include <map>

#include "linkgeom/errors.hpp"
#include "linkgeom/linalg.hpp"

namespace linkgeom {

SimplexRef::SimplexRef(std::initializer_list<std::size_t> vertices) : SimplexRef(IndexSet(vertices)) {}

SimplexRef::SimplexRef(IndexSet vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.empty()) throw GeometryError(ErrorCode::kInvalidArgument, "empty simplex");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "repeated simplex vertex");
  }
}

bool SimplexRef::shares_vertex_with(const SimplexRef& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

std::vector<SimplexRef> SimplexRef::facets() const {
  std::vector<SimplexRef> out;
  if (vertices_.size() < 2) return out;
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    IndexSet f;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i != skip) f.push_back(vertices_[i]);
    }
    out.emplace_back(std::move(f));
  }
  return out;
}

BrokenLine::BrokenLine(IndexSet vertices, bool closed) : vertices_(std::move(vertices)), closed_(closed) {
  if (vertices_.size() < 2) throw GeometryError(ErrorCode::kInvalidArgument, "broken line needs 2 vertices");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i + 1]) {
      throw GeometryError(ErrorCode::kInvalidArgument, "consecutive broken-line vertices coincide");
    }
  }
  if (closed_ && vertices_.front() == vertices_.back()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "closed broken line stores its first vertex twice");
  }
}

std::vector<SimplexRef> BrokenLine::sides() const {
  std::vector<SimplexRef> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.push_back(SimplexRef{vertices_[i], vertices_[i + 1]});
  if (closed_ && vertices_.size() > 2) out.push_back(SimplexRef{vertices_.back(), vertices_.front()});
  return out;
}

ContactResult classify_contact(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  const std::size_t d = cfg.dimension();
  if (s1.dim() + s2.dim() != d) {
    throw GeometryError(ErrorCode::kInvalidArgument, "simplices are not of complementary dimension",
                        {s1.vertices(), s2.vertices()});
  }
  if (s1.shares_vertex_with(s2)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "simplices share a vertex", {s1.vertices(), s2.vertices()});
  }
  const std::size_t k1 = s1.size();
  const std::size_t n = k1 + s2.size();  // == d + 2
  Matrix a(d + 2, Vector(n, Scalar(0)));
  Vector b(d + 2, Scalar(0));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < k1; ++i) a[c][i] = cfg[s1[i]][c];
    for (std::size_t j = 0; j < s2.size(); ++j) a[c][k1 + j] = -cfg[s2[j]][c];
  }
  for (std::size_t i = 0; i < k1; ++i) a[d][i] = Scalar(1);
  for (std::size_t j = 0; j < s2.size(); ++j) a[d + 1][k1 + j] = Scalar(1);
  b[d] = Scalar(1);
  b[d + 1] = Scalar(1);

  const LinearSolution sol = solve(a, b);
  ContactResult out;
  if (sol.kind == LinearSolution::Kind::kNone) return out;
  if (sol.kind == LinearSolution::Kind::kInfinite) {
    throw GeometryError(ErrorCode::kSingularSystem, "affine hulls are not transversal",
                        {s1.vertices(), s2.vertices()});
  }
  bool any_zero = false;
  for (const auto& x : sol.x) {
    const int s = x.sign();
    if (s < 0) return out;
    any_zero = any_zero || s == 0;
  }
  Transversal t;
  t.alpha.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(k1));
  t.beta.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(k1), sol.x.end());
  t.point.coords.assign(d, Scalar(0));
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t c = 0; c < d; ++c) t.point[c] += t.alpha[i] * cfg[s1[i]][c];
  }
  out.kind = any_zero ? ContactKind::kBoundary : ContactKind::kCrossing;
  out.transversal = std::move(t);
  return out;
}

std::optional<Transversal> transversal_point(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  ContactResult r = classify_contact(cfg, s1, s2);
  if (r.kind != ContactKind::kCrossing) return std::nullopt;
  return std::move(r.transversal);
}

namespace {

// 1 for a crossing, 0 for a miss; throws on boundary contact or shared vertex.
std::size_t strict_crossing(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  if (s1.shares_vertex_with(s2)) {
    throw GeometryError(ErrorCode::kNotTransversal, "simplices share a vertex", {s1.vertices(), s2.vertices()});
  }
  const ContactResult r = classify_contact(cfg, s1, s2);
  if (r.kind == ContactKind::kBoundary) {
    throw GeometryError(ErrorCode::kNotTransversal, "simplices touch along their boundaries",
                        {s1.vertices(), s2.vertices()});
  }
  return r.kind == ContactKind::kCrossing ? 1 : 0;
}

// As strict_crossing, reporting coplanar-style degeneracy as NOT_TRANSVERSAL.
std::size_t transversal_crossing(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  try {
    return strict_crossing(cfg, s1, s2);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::kSingularSystem) throw;
    throw GeometryError(ErrorCode::kNotTransversal, "affine hulls are not transversal", e.simplices());
  }
}

}  // namespace

std::size_t count_interior_crossings(const Configuration& cfg, const std::vector<SimplexRef>& family,
                                     bool disjoint_only) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].shares_vertex_with(family[j])) {
        if (disjoint_only) continue;
        throw GeometryError(ErrorCode::kInvalidArgument, "pair shares a vertex",
                            {family[i].vertices(), family[j].vertices()});
      }
      count += strict_crossing(cfg, family[i], family[j]);
    }
  }
  return count;
}

std::size_t outline_crossings(const Configuration& cfg, const SimplexRef& boundary_of, const SimplexRef& target) {
  std::size_t count = 0;
  for (const auto& facet : boundary_of.facets()) count += strict_crossing(cfg, facet, target);
  return count;
}

TwoCycleCheck is_two_cycle(const std::vector<SimplexRef>& triangles) {
  std::map<SimplexRef, std::size_t> multiplicity;
  for (const auto& t : triangles) {
    if (t.size() != 3) throw GeometryError(ErrorCode::kInvalidArgument, "2-cycle member is not a triangle");
    for (const auto& e : t.facets()) ++multiplicity[e];
  }
  TwoCycleCheck out;
  for (const auto& [edge, m] : multiplicity) {
    if (m % 2) {
      out.ok = false;
      out.offending_edge = edge;
      break;
    }
  }
  return out;
}

std::size_t line_body_crossings(const Configuration& cfg, const BrokenLine& line, const TwoCycle& cycle) {
  if (cfg.dimension() != 3) throw GeometryError(ErrorCode::kDimensionMismatch, "line_body_crossings needs R^3");
  std::size_t count = 0;
  for (const auto& side : line.sides()) {
    for (const auto& tri : cycle.triangles) count += transversal_crossing(cfg, side, tri);
  }
  return count;
}

std::size_t bodies_crossings_4d(const Configuration& cfg, const TwoCycle& c1, const TwoCycle& c2) {
  if (cfg.dimension() != 4) throw GeometryError(ErrorCode::kDimensionMismatch, "bodies_crossings_4d needs R^4");
  std::size_t count = 0;
  for (const auto& t1 : c1.triangles) {
    for (const auto& t2 : c2.triangles) count += transversal_crossing(cfg, t1, t2);
  }
  return count;
}

TwoCycle tetrahedron_surface(const SimplexRef& tet) {
  if (tet.size() != 4) throw GeometryError(ErrorCode::kInvalidArgument, "tetrahedron needs 4 vertices");
  return TwoCycle{tet.facets()};
}

}  // namespace linkgeom
