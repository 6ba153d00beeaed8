#include "linkgeom/realizability.hpp"

#include <algorithm>
#include <set>

#include "linkgeom/errors.hpp"
#include "linkgeom/lp.hpp"

namespace linkgeom {

Hypergraph2::Hypergraph2(std::size_t vertex_count, std::vector<SimplexRef> faces, std::vector<SimplexRef> edges)
    : vertex_count_(vertex_count), faces_(std::move(faces)), edges_(std::move(edges)) {
  std::set<SimplexRef> seen;
  for (const auto& f : faces_) {
    if (f.size() != 3) throw GeometryError(ErrorCode::kInvalidArgument, "hypergraph face is not a 3-set");
    if (f.vertices().back() >= vertex_count_) throw GeometryError(ErrorCode::kInvalidArgument, "face vertex out of range");
    if (!seen.insert(f).second) throw GeometryError(ErrorCode::kInvalidArgument, "repeated hypergraph face");
  }
  for (const auto& e : edges_) {
    if (e.size() != 2) throw GeometryError(ErrorCode::kInvalidArgument, "hypergraph edge is not a 2-set");
    if (e.vertices().back() >= vertex_count_) throw GeometryError(ErrorCode::kInvalidArgument, "edge vertex out of range");
    if (!seen.insert(e).second) throw GeometryError(ErrorCode::kInvalidArgument, "repeated hypergraph edge");
  }
}

Hypergraph2 Hypergraph2::complete(std::size_t k) { return Hypergraph2(k, all_simplices(k, 3)); }

const char* pair_class_name(PairClass::Tag tag) {
  switch (tag) {
    case PairClass::Tag::kDisjoint: return "DISJOINT";
    case PairClass::Tag::kCommonVertexOnly: return "COMMON_VERTEX_ONLY";
    case PairClass::Tag::kCommonEdgeOnly: return "COMMON_EDGE_ONLY";
    case PairClass::Tag::kImproper: return "IMPROPER";
  }
  return "UNKNOWN";
}

std::vector<SimplexRef> all_simplices(std::size_t n, std::size_t k) {
  std::vector<SimplexRef> out;
  for_each_subset(n, k, [&](const IndexSet& s) {
    out.emplace_back(s);
    return true;
  });
  return out;
}

namespace {

// Some coordinate separates the bounding boxes of the two vertex sets.
bool boxes_separated(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  for (std::size_t c = 0; c < cfg.dimension(); ++c) {
    const Scalar* lo1 = nullptr;
    const Scalar* hi1 = nullptr;
    for (auto i : s1.vertices()) {
      const Scalar& x = cfg[i][c];
      if (!lo1 || x < *lo1) lo1 = &x;
      if (!hi1 || x > *hi1) hi1 = &x;
    }
    const Scalar* lo2 = nullptr;
    const Scalar* hi2 = nullptr;
    for (auto i : s2.vertices()) {
      const Scalar& x = cfg[i][c];
      if (!lo2 || x < *lo2) lo2 = &x;
      if (!hi2 || x > *hi2) hi2 = &x;
    }
    if (*hi1 < *lo2 || *hi2 < *lo1) return true;
  }
  return false;
}

struct CommonPointLp {
  Matrix a;
  Vector b;
  std::size_t k1 = 0;
};

// Variables: weights on s1's vertices, then on s2's; both sum to 1 and
// produce the same point.
CommonPointLp common_point_lp(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  const std::size_t d = cfg.dimension();
  CommonPointLp lp;
  lp.k1 = s1.size();
  const std::size_t n = s1.size() + s2.size();
  lp.a.assign(d + 2, Vector(n, Scalar(0)));
  lp.b.assign(d + 2, Scalar(0));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < s1.size(); ++i) lp.a[c][i] = cfg[s1[i]][c];
    for (std::size_t j = 0; j < s2.size(); ++j) lp.a[c][lp.k1 + j] = -cfg[s2[j]][c];
  }
  for (std::size_t i = 0; i < s1.size(); ++i) lp.a[d][i] = Scalar(1);
  for (std::size_t j = 0; j < s2.size(); ++j) lp.a[d + 1][lp.k1 + j] = Scalar(1);
  lp.b[d] = Scalar(1);
  lp.b[d + 1] = Scalar(1);
  return lp;
}

Point combination(const Configuration& cfg, const SimplexRef& s, const Vector& x) {
  Point p(std::vector<Scalar>(cfg.dimension(), Scalar(0)));
  for (std::size_t i = 0; i < s.size(); ++i) p = p + x[i] * cfg[s[i]];
  return p;
}

bool meet_by_lp(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  const CommonPointLp lp = common_point_lp(cfg, s1, s2);
  return find_feasible(lp.a, lp.b).has_value();
}

// Complementary-dimension shortcut: nullopt when the hulls are not
// transversal and the LP has to decide.
std::optional<bool> meet_by_contact(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  try {
    return classify_contact(cfg, s1, s2).kind != ContactKind::kMiss;
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::kSingularSystem) return std::nullopt;
    throw;
  }
}

}  // namespace

bool closed_simplices_meet(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  if (s1.shares_vertex_with(s2)) return true;
  if (boxes_separated(cfg, s1, s2)) return false;
  const std::size_t d = cfg.dimension();
  if (s1.dim() + s2.dim() == d) {
    if (auto r = meet_by_contact(cfg, s1, s2)) return *r;
    return meet_by_lp(cfg, s1, s2);
  }
  if (d == 3 && s1.size() == 3 && s2.size() == 3) {
    // Two closed triangles in R^3 meet iff an edge of one meets the other.
    for (const auto& [edges_of, other] : {std::pair{&s1, &s2}, std::pair{&s2, &s1}}) {
      for (const auto& e : edges_of->facets()) {
        auto r = meet_by_contact(cfg, e, *other);
        if (!r) return meet_by_lp(cfg, s1, s2);
        if (*r) return true;
      }
    }
    return false;
  }
  return meet_by_lp(cfg, s1, s2);
}

PairClass classify_pair(const Configuration& cfg, const SimplexRef& s1, const SimplexRef& s2) {
  if (s1.size() < 2 || s1.size() > 3 || s2.size() < 2 || s2.size() > 3) {
    throw GeometryError(ErrorCode::kInvalidArgument, "classify_pair takes segments or triangles");
  }
  PairClass out;
  std::set<std::size_t> shared;
  for (auto v : s1.vertices()) {
    if (std::binary_search(s2.vertices().begin(), s2.vertices().end(), v)) shared.insert(v);
  }
  if (shared.empty() && boxes_separated(cfg, s1, s2)) return out;

  const CommonPointLp lp = common_point_lp(cfg, s1, s2);
  Vector objective(lp.a[0].size(), Scalar(0));
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (!shared.count(s1[i])) objective[i] = Scalar(1);
  }
  for (std::size_t j = 0; j < s2.size(); ++j) {
    if (!shared.count(s2[j])) objective[lp.k1 + j] = Scalar(1);
  }
  const LpResult res = maximize(lp.a, lp.b, objective);
  if (res.status == LpResult::Status::kInfeasible) return out;
  const bool identical = shared.size() == s1.size() && shared.size() == s2.size();
  if (res.value.sign() > 0 || shared.empty() || identical) {
    out.tag = PairClass::Tag::kImproper;
    out.witness = combination(cfg, s1, res.x);
    return out;
  }
  out.tag = shared.size() == 1 ? PairClass::Tag::kCommonVertexOnly : PairClass::Tag::kCommonEdgeOnly;
  return out;
}

EmbeddingCheck is_embedded(const Configuration& cfg, const std::vector<SimplexRef>& simplices) {
  EmbeddingCheck out;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    for (std::size_t j = i + 1; j < simplices.size(); ++j) {
      const auto& s1 = simplices[i];
      const auto& s2 = simplices[j];
      const bool improper = s1.shares_vertex_with(s2)
                                ? classify_pair(cfg, s1, s2).tag == PairClass::Tag::kImproper
                                : closed_simplices_meet(cfg, s1, s2);
      if (improper) {
        out.embedded = false;
        out.witness = std::pair{s1, s2};
        return out;
      }
    }
  }
  return out;
}

EmbeddingCheck is_linear_realization(const Hypergraph2& hg, const Configuration& cfg,
                                     const std::vector<std::size_t>& vertex_map) {
  if (vertex_map.size() != hg.vertex_count()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "vertex map size differs from the vertex count");
  }
  std::set<std::size_t> image(vertex_map.begin(), vertex_map.end());
  if (image.size() != vertex_map.size() || (!image.empty() && *image.rbegin() >= cfg.size())) {
    throw GeometryError(ErrorCode::kInvalidArgument, "vertex map is not injective into the configuration");
  }
  std::vector<SimplexRef> mapped;
  auto map = [&](const SimplexRef& s) {
    IndexSet v;
    for (auto i : s.vertices()) v.push_back(vertex_map[i]);
    return SimplexRef(std::move(v));
  };
  for (const auto& f : hg.faces()) {
    SimplexRef t = map(f);
    if (!affinely_independent(cfg, t.vertices())) {
      throw GeometryError(ErrorCode::kDegenerateFace, "face maps to a collinear triple", {t.vertices()});
    }
    mapped.push_back(std::move(t));
  }
  for (const auto& e : hg.edges()) mapped.push_back(map(e));
  return is_embedded(cfg, mapped);
}

EmbeddingCheck is_linear_realization(const Hypergraph2& hg, const Configuration& cfg) {
  std::vector<std::size_t> identity(hg.vertex_count());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return is_linear_realization(hg, cfg, identity);
}

bool separated_sides(const Configuration& cfg, std::size_t p, std::size_t q, const SimplexRef& triangle) {
  if (cfg.dimension() != 2) throw GeometryError(ErrorCode::kDimensionMismatch, "separated_sides lives in R^2");
  const SimplexRef seg{p, q};
  if (triangle.size() != 3 || seg.shares_vertex_with(triangle)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "segment must avoid the triangle's vertices");
  }
  std::size_t count = 0;
  for (const auto& side : triangle.facets()) {
    const ContactResult r = classify_contact(cfg, seg, side);
    if (r.kind == ContactKind::kBoundary) {
      throw GeometryError(ErrorCode::kNotTransversal, "segment touches the outline", {seg.vertices(), side.vertices()});
    }
    if (r.kind == ContactKind::kCrossing) ++count;
  }
  return count % 2 == 1;
}

}  // namespace linkgeom
