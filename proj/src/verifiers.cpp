#include "linkgeom/verifiers.hpp"

#include <array>

#include "linkgeom/errors.hpp"
#include "linkgeom/linking.hpp"

namespace linkgeom {

const char* claim_name(ParityReport::Claim claim) {
  switch (claim) {
    case ParityReport::Claim::kOdd: return "ODD";
    case ParityReport::Claim::kEven: return "EVEN";
    case ParityReport::Claim::kWitnessExists: return "WITNESS_EXISTS";
    case ParityReport::Claim::kSearch: return "SEARCH";
  }
  return "UNKNOWN";
}

const char* verdict_name(ParityReport::Verdict verdict) {
  switch (verdict) {
    case ParityReport::Verdict::kConfirmed: return "CONFIRMED";
    case ParityReport::Verdict::kViolated: return "VIOLATED";
    case ParityReport::Verdict::kDegenerate: return "DEGENERATE";
  }
  return "UNKNOWN";
}

namespace {

using Claim = ParityReport::Claim;
using Verdict = ParityReport::Verdict;

void require_shape(const Configuration& cfg, std::size_t points, std::size_t dim, const char* what) {
  if (cfg.dimension() != dim) {
    throw GeometryError(ErrorCode::kDimensionMismatch,
                        std::string(what) + " needs points in R^" + std::to_string(dim));
  }
  if (cfg.size() != points) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        std::string(what) + " needs exactly " + std::to_string(points) + " points");
  }
}

ParityReport start(const std::string& id, const Configuration& cfg, Claim claim) {
  ParityReport r;
  r.theorem_id = id;
  r.input_summary = std::to_string(cfg.size()) + " points in R^" + std::to_string(cfg.dimension());
  r.claim = claim;
  return r;
}

void settle_parity(ParityReport& r) {
  const bool odd = r.count % 2 == 1;
  const bool ok = r.claim == Claim::kOdd ? odd : !odd;
  r.verdict = ok ? Verdict::kConfirmed : Verdict::kViolated;
}

void settle_existence(ParityReport& r) {
  r.verdict = r.witnesses.empty() ? Verdict::kViolated : Verdict::kConfirmed;
}

std::optional<std::string> general_position_problem(const Configuration& cfg) {
  const auto gp = is_general_position(cfg);
  if (gp.ok) return std::nullopt;
  std::string s = "not in general position: affinely dependent subset {";
  for (std::size_t i = 0; i < gp.witness->size(); ++i) s += (i ? "," : "") + std::to_string((*gp.witness)[i]);
  return s + "}";
}

IndexSet complement(std::size_t n, const IndexSet& used) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    bool taken = false;
    for (auto u : used) taken = taken || u == i;
    if (!taken) out.push_back(i);
  }
  return out;
}

// Vertex-disjoint pairs of the family whose closed simplices meet.
std::vector<Witness> meeting_pairs(const Configuration& cfg, const std::vector<SimplexRef>& family, bool first_only) {
  std::vector<Witness> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].shares_vertex_with(family[j])) continue;
      if (closed_simplices_meet(cfg, family[i], family[j])) {
        out.push_back({family[i].vertices(), family[j].vertices()});
        if (first_only) return out;
      }
    }
  }
  return out;
}

// Crossing pairs of vertex-disjoint complementary simplices.
std::vector<Witness> crossing_pairs(const Configuration& cfg, const std::vector<SimplexRef>& family) {
  std::vector<Witness> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].shares_vertex_with(family[j])) continue;
      if (count_interior_crossings(cfg, {family[i], family[j]}, true) > 0) {
        out.push_back({family[i].vertices(), family[j].vertices()});
      }
    }
  }
  return out;
}

// Degenerate branch with a closed-intersection witness, as in the first
// sentence of the intersection theorems.
void degenerate_with_witness(ParityReport& r, const Configuration& cfg, const std::vector<SimplexRef>& family,
                             const std::string& why) {
  r.degeneracy = why;
  r.verdict = Verdict::kDegenerate;
  r.claim = Claim::kWitnessExists;
  r.witnesses = meeting_pairs(cfg, family, true);
  r.count = r.witnesses.size();
  if (r.witnesses.empty()) r.verdict = Verdict::kViolated;
}

ParityReport crossing_parity(const std::string& id, const Configuration& cfg, const std::vector<SimplexRef>& family) {
  ParityReport r = start(id, cfg, Claim::kOdd);
  if (auto why = general_position_problem(cfg)) {
    degenerate_with_witness(r, cfg, family, *why);
    return r;
  }
  try {
    r.witnesses = crossing_pairs(cfg, family);
  } catch (const GeometryError& e) {
    degenerate_with_witness(r, cfg, family, e.what());
    return r;
  }
  r.count = r.witnesses.size();
  settle_parity(r);
  return r;
}

std::vector<SimplexRef> bipartite_segments(const IndexSet& a, const IndexSet& b) {
  std::vector<SimplexRef> out;
  for (auto i : a) {
    for (auto j : b) out.push_back(SimplexRef{i, j});
  }
  return out;
}

// Crossings of the open segment s with the sides of the closed broken line.
std::size_t segment_loop_crossings(const Configuration& cfg, const SimplexRef& s, const BrokenLine& loop) {
  std::size_t count = 0;
  for (const auto& side : loop.sides()) count += count_interior_crossings(cfg, {s, side}, false);
  return count;
}

}  // namespace

ParityReport verify_plane_intersection(const Configuration& cfg) {
  require_shape(cfg, 5, 2, "plane-intersection");
  return crossing_parity("plane-intersection", cfg, all_simplices(5, 2));
}

ParityReport verify_k33_plane(const Configuration& cfg) {
  require_shape(cfg, 6, 2, "k33");
  return crossing_parity("k33", cfg, bipartite_segments({0, 1, 2}, {3, 4, 5}));
}

ParityReport verify_rlt_pre(const Configuration& cfg) {
  require_shape(cfg, 6, 2, "rlt-pre");
  ParityReport r = start("rlt-pre", cfg, Claim::kWitnessExists);
  if (auto why = general_position_problem(cfg)) {
    r.degeneracy = why;
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  const auto check = is_embedded(cfg, bipartite_segments({0, 1, 2, 3}, {4, 5}));
  if (!check.embedded) {
    r.degeneracy = "two segments of different colors meet outside a common vertex";
    r.verdict = Verdict::kDegenerate;
    r.witnesses.push_back({check.witness->first.vertices(), check.witness->second.vertices()});
    return r;
  }
  const std::array<std::array<std::size_t, 4>, 3> splits = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& s : splits) {
    const BrokenLine loop({s[0], 4, s[1], 5}, true);
    if (segment_loop_crossings(cfg, SimplexRef{s[2], s[3]}, loop) % 2 == 1) {
      r.witnesses.push_back({IndexSet{s[0], s[1]}, IndexSet{s[2], s[3]}});
    }
  }
  r.count = r.witnesses.size();
  settle_existence(r);
  return r;
}

ParityReport verify_unlinking_plane(const Configuration& cfg) {
  require_shape(cfg, 5, 2, "unlinking-plane");
  ParityReport r = start("unlinking-plane", cfg, Claim::kEven);
  if (auto why = general_position_problem(cfg)) {
    r.degeneracy = why;
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  for (const auto& seg : all_simplices(5, 2)) {
    const IndexSet tri = complement(5, seg.vertices());
    const BrokenLine outline(tri, true);
    if (segment_loop_crossings(cfg, seg, outline) == 1) r.witnesses.push_back({seg.vertices(), tri});
  }
  r.count = r.witnesses.size();
  settle_parity(r);
  return r;
}

ParityReport verify_cgs(const Configuration& cfg) {
  require_shape(cfg, 6, 3, "cgs");
  ParityReport r = start("cgs", cfg, Claim::kOdd);
  if (auto why = general_position_problem(cfg)) {
    r.degeneracy = *why + "; perturb the points and rerun";
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  try {
    for (const auto& t1 : all_simplices(6, 3)) {
      if (t1[0] != 0) break;  // each unordered pair once: t1 holds point 0
      const SimplexRef t2(complement(6, t1.vertices()));
      if (triangles_linked(cfg, t1, t2).linked) r.witnesses.push_back({t1.vertices(), t2.vertices()});
    }
  } catch (const GeometryError& e) {
    r.witnesses.clear();
    r.degeneracy = std::string(e.what()) + "; perturb the points and rerun";
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  r.count = r.witnesses.size();
  settle_parity(r);
  return r;
}

ParityReport verify_intersection_r3(const Configuration& cfg) {
  require_shape(cfg, 6, 3, "intersection-r3");
  ParityReport r = start("intersection-r3", cfg, Claim::kWitnessExists);
  for (const auto& seg : all_simplices(6, 2)) {
    const IndexSet rest = complement(6, seg.vertices());
    for_each_subset(4, 3, [&](const IndexSet& pick) {
      const SimplexRef tri{rest[pick[0]], rest[pick[1]], rest[pick[2]]};
      if (closed_simplices_meet(cfg, seg, tri)) r.witnesses.push_back({seg.vertices(), tri.vertices()});
      return true;
    });
  }
  r.count = r.witnesses.size();
  settle_existence(r);
  return r;
}

std::vector<std::size_t> segment_surface_counts(const Configuration& cfg) {
  require_shape(cfg, 6, 3, "segment_surface_counts");
  std::vector<std::size_t> counts;
  for (const auto& seg : all_simplices(6, 2)) {
    const SimplexRef tet(complement(6, seg.vertices()));
    counts.push_back(line_body_crossings(cfg, BrokenLine(seg.vertices(), false), tetrahedron_surface(tet)));
  }
  return counts;
}

ParityReport verify_unlinking_r3(const Configuration& cfg) {
  require_shape(cfg, 6, 3, "unlinking-r3");
  ParityReport r = start("unlinking-r3", cfg, Claim::kEven);
  if (auto why = general_position_problem(cfg)) {
    r.degeneracy = why;
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  std::vector<std::size_t> counts;
  try {
    counts = segment_surface_counts(cfg);
  } catch (const GeometryError& e) {
    r.degeneracy = e.what();
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  const auto segs = all_simplices(6, 2);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (counts[i] == 1) r.witnesses.push_back({segs[i].vertices(), complement(6, segs[i].vertices())});
  }
  r.count = r.witnesses.size();
  settle_parity(r);
  return r;
}

ParityReport verify_sachs(const Configuration& cfg) {
  require_shape(cfg, 8, 3, "sachs");
  ParityReport r = start("sachs", cfg, Claim::kWitnessExists);
  const auto check = is_embedded(cfg, bipartite_segments({0, 1, 2, 3}, {4, 5, 6, 7}));
  if (!check.embedded) {
    r.degeneracy = "two segments of different colors share an interior point";
    r.verdict = Verdict::kDegenerate;
    r.witnesses.push_back({check.witness->first.vertices(), check.witness->second.vertices()});
    return r;
  }
  const std::array<std::array<std::size_t, 4>, 3> red = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  const std::array<std::array<std::size_t, 4>, 3> blue = {{{4, 5, 6, 7}, {4, 6, 5, 7}, {4, 7, 5, 6}}};
  try {
    for (const auto& rs : red) {
      for (const auto& bs : blue) {
        for (int swap = 0; swap < 2; ++swap) {
          const std::size_t b0 = swap ? bs[2] : bs[0];
          const std::size_t b1 = swap ? bs[3] : bs[1];
          const std::size_t b2 = swap ? bs[0] : bs[2];
          const std::size_t b3 = swap ? bs[1] : bs[3];
          const BrokenLine l1({rs[0], b0, rs[1], b1}, true);
          const BrokenLine l2({rs[2], b2, rs[3], b3}, true);
          if (quad_loops_linked(cfg, l1, l2).linked) r.witnesses.push_back({l1.vertices(), l2.vertices()});
        }
      }
    }
  } catch (const GeometryError& e) {
    r.witnesses.clear();
    r.degeneracy = e.what();
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  r.count = r.witnesses.size();
  settle_existence(r);
  return r;
}

ParityReport verify_vkf(const Configuration& cfg) {
  require_shape(cfg, 7, 4, "vkf");
  return crossing_parity("vkf", cfg, all_simplices(7, 3));
}

ParityReport verify_unlinking_r4(const Configuration& cfg) {
  require_shape(cfg, 7, 4, "unlinking-r4");
  ParityReport r = start("unlinking-r4", cfg, Claim::kEven);
  if (auto why = general_position_problem(cfg)) {
    r.degeneracy = why;
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  try {
    for (const auto& tri : all_simplices(7, 3)) {
      const SimplexRef tet(complement(7, tri.vertices()));
      const std::size_t c = bodies_crossings_4d(cfg, TwoCycle{{tri}}, tetrahedron_surface(tet));
      r.count += c;
      if (c > 0) r.witnesses.push_back({tri.vertices(), tet.vertices()});
    }
  } catch (const GeometryError& e) {
    r.witnesses.clear();
    r.count = 0;
    r.degeneracy = e.what();
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  settle_parity(r);
  return r;
}

ParityReport verify_join3(const Configuration& cfg) {
  require_shape(cfg, 9, 4, "join3");
  ParityReport r = start("join3", cfg, Claim::kWitnessExists);
  std::vector<SimplexRef> family;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 3; b < 6; ++b) {
      for (std::size_t c = 6; c < 9; ++c) family.push_back(SimplexRef{a, b, c});
    }
  }
  r.witnesses = meeting_pairs(cfg, family, false);
  r.count = r.witnesses.size();
  settle_existence(r);
  return r;
}

ParityReport verify_stat_il(const Configuration& cfg, std::size_t max_n) {
  const std::size_t n = cfg.dimension();
  if (n < 1 || n > max_n) {
    throw GeometryError(ErrorCode::kInvalidArgument, "stat-il dimension outside 1.." + std::to_string(max_n));
  }
  require_shape(cfg, n + 3, n, "stat-il");
  if (n % 2 == 0) return crossing_parity("stat-il", cfg, all_simplices(n + 3, n / 2 + 1));

  ParityReport r = start("stat-il", cfg, Claim::kOdd);
  if (auto why = general_position_problem(cfg)) {
    r.degeneracy = why;
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  const auto family = all_simplices(n + 3, (n + 1) / 2 + 1);
  try {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (family[i].shares_vertex_with(family[j])) continue;
        if (simplices_linked(cfg, family[i], family[j]).linked) {
          r.witnesses.push_back({family[i].vertices(), family[j].vertices()});
        }
      }
    }
  } catch (const GeometryError& e) {
    r.witnesses.clear();
    r.degeneracy = e.what();
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  r.count = r.witnesses.size();
  settle_parity(r);
  return r;
}

ParityReport verify_product(const ProductGrid& grid) {
  const Configuration& cfg = grid.configuration();
  const std::size_t lo = std::min(grid.m(), grid.n());
  const std::size_t hi = std::max(grid.m(), grid.n());
  const std::size_t d = cfg.dimension();
  const bool guaranteed = (d == 3 && ((hi == 5 && lo == 3) || (hi == 4 && lo == 4))) || (d == 4 && hi == 5 && lo == 5);
  ParityReport r = start("product", cfg, guaranteed ? Claim::kWitnessExists : Claim::kSearch);
  r.input_summary = "(" + std::to_string(grid.m()) + "," + std::to_string(grid.n()) + ")-grid in R^" + std::to_string(d);
  r.witnesses = meeting_pairs(cfg, grid.triangles(), true);
  r.count = r.witnesses.size();
  if (guaranteed) {
    settle_existence(r);
  } else {
    r.verdict = Verdict::kConfirmed;  // count 0 certifies absence
  }
  return r;
}

ParityReport verify_deleted_face_linking(const Configuration& cfg, const std::vector<std::size_t>& deleted) {
  require_shape(cfg, 6, 3, "deleted-face");
  const bool valid = !deleted.empty() && deleted.size() <= 3 && [&] {
    for (std::size_t i = 0; i < deleted.size(); ++i) {
      if (deleted[i] != i + 2) return false;
    }
    return true;
  }();
  if (!valid) throw GeometryError(ErrorCode::kInvalidArgument, "deleted edges must be 12, 12 13, or 12 13 14");
  ParityReport r = start("deleted-face", cfg, Claim::kWitnessExists);
  std::vector<SimplexRef> faces;
  std::vector<SimplexRef> edges;
  for (std::size_t j = 1; j <= 5; ++j) {
    for (std::size_t k = j + 1; k <= 5; ++k) {
      const bool gone = j == 1 && k <= deleted.size() + 1;
      if (!gone) faces.push_back(SimplexRef{0, j, k});
    }
  }
  for (auto k : deleted) edges.push_back(SimplexRef{1, k});
  try {
    const auto check = is_linear_realization(Hypergraph2(6, faces, edges), cfg);
    if (!check.embedded) {
      r.degeneracy = "the face and segment family is not embedded";
      r.verdict = Verdict::kDegenerate;
      r.witnesses.push_back({check.witness->first.vertices(), check.witness->second.vertices()});
      return r;
    }
    for (auto k : deleted) {
      const SimplexRef t1{0, 1, k};
      const SimplexRef t2(complement(6, t1.vertices()));
      if (triangles_linked(cfg, t1, t2).linked) r.witnesses.push_back({t1.vertices(), t2.vertices()});
    }
  } catch (const GeometryError& e) {
    r.witnesses.clear();
    r.degeneracy = e.what();
    r.verdict = Verdict::kDegenerate;
    return r;
  }
  r.count = r.witnesses.size();
  settle_existence(r);
  return r;
}

namespace {

Configuration general_random(std::size_t n, std::size_t d, std::uint64_t seed, int bits) {
  const Configuration raw = random_configuration(n, d, seed, bits);
  if (is_general_position(raw).ok) return raw;
  return perturb(raw, seed, [](const Configuration& c) { return is_general_position(c).ok; });
}

// Redraws until `accept` holds; the k-th draw uses trial_seed(seed, k).
Configuration rejection_sample(std::size_t n, std::size_t d, std::uint64_t seed, int bits,
                               const std::function<bool(const Configuration&)>& accept) {
  for (std::uint64_t k = 0; k < 100000; ++k) {
    Configuration c = general_random(n, d, trial_seed(seed, k), bits);
    if (accept(c)) return c;
  }
  throw GeometryError(ErrorCode::kSearchExhausted, "no random input satisfied the precondition");
}

VerifierEntry fixed(std::string id, std::string description, std::size_t n, std::size_t d,
                    ParityReport (*fn)(const Configuration&)) {
  return VerifierEntry{std::move(id), std::move(description),
                       [fn](const Configuration& c, const VerifyOptions&) { return fn(c); },
                       [n, d](std::uint64_t seed, int bits, const VerifyOptions&) {
                         return general_random(n, d, seed, bits);
                       }};
}

std::vector<VerifierEntry> build_registry() {
  std::vector<VerifierEntry> reg;
  reg.push_back(fixed("plane-intersection", "5 points in R^2: disjoint segment crossings are odd", 5, 2,
                      verify_plane_intersection));
  reg.push_back(fixed("k33", "3+3 points in R^2: bipartite segment crossings are odd", 6, 2, verify_k33_plane));
  VerifierEntry pre = fixed("rlt-pre", "4 red + 2 blue points in R^2: odd red segment / loop crossing", 6, 2,
                            verify_rlt_pre);
  pre.sample = [](std::uint64_t seed, int bits, const VerifyOptions&) {
    return rejection_sample(6, 2, seed, bits, [](const Configuration& c) {
      return is_embedded(c, bipartite_segments({0, 1, 2, 3}, {4, 5})).embedded;
    });
  };
  reg.push_back(std::move(pre));
  reg.push_back(fixed("unlinking-plane", "5 points in R^2: once-crossing segments are even", 5, 2,
                      verify_unlinking_plane));
  reg.push_back(fixed("cgs", "6 points in R^3: linked triangle pairs are odd", 6, 3, verify_cgs));
  reg.push_back(fixed("intersection-r3", "6 points in R^3: a segment meets a disjoint triangle", 6, 3,
                      verify_intersection_r3));
  reg.push_back(fixed("unlinking-r3", "6 points in R^3: once-crossing segments are even", 6, 3, verify_unlinking_r3));
  reg.push_back(fixed("sachs", "4 red + 4 blue points in R^3: a linked pair of quadrangular loops", 8, 3,
                      verify_sachs));
  reg.push_back(fixed("vkf", "7 points in R^4: disjoint triangle crossings are odd", 7, 4, verify_vkf));
  reg.push_back(fixed("unlinking-r4", "7 points in R^4: triangle / tetrahedron surface crossings are even", 7, 4,
                      verify_unlinking_r4));
  reg.push_back(fixed("join3", "3+3+3 points in R^4: two disjoint transversal triangles meet", 9, 4, verify_join3));
  reg.push_back(VerifierEntry{
      "stat-il", "n+3 points in R^n: the intersection / linking count is odd",
      [](const Configuration& c, const VerifyOptions& o) { return verify_stat_il(c, o.max_n); },
      [](std::uint64_t seed, int bits, const VerifyOptions& o) {
        return general_random(o.stat_il_n + 3, o.stat_il_n, seed, bits);
      }});
  reg.push_back(VerifierEntry{
      "product", "(m,n)-grid: two disjoint triangles of the product meet",
      [](const Configuration& c, const VerifyOptions& o) {
        std::vector<std::string> labels;
        for (std::size_t j = 0; j < o.grid_m; ++j) {
          for (std::size_t p = 0; p < o.grid_n; ++p) labels.push_back(grid_label(j + 1, p + 1));
        }
        if (c.size() != o.grid_m * o.grid_n) throw GeometryError(ErrorCode::kShapeMismatch, "point count differs from m*n");
        return verify_product(ProductGrid(o.grid_m, o.grid_n, Configuration(c.dimension(), c.points(), labels)));
      },
      [](std::uint64_t seed, int bits, const VerifyOptions& o) {
        return general_random(o.grid_m * o.grid_n, o.grid_dim, seed, bits);
      }});
  reg.push_back(VerifierEntry{
      "deleted-face", "6 points in R^3: an embedded cone family forces a linked pair",
      [](const Configuration& c, const VerifyOptions& o) { return verify_deleted_face_linking(c, o.deleted); },
      [](std::uint64_t seed, int bits, const VerifyOptions& o) {
        return rejection_sample(6, 3, seed, bits, [&](const Configuration& c) {
          return verify_deleted_face_linking(c, o.deleted).verdict != Verdict::kDegenerate;
        });
      }});
  return reg;
}

}  // namespace

const std::vector<VerifierEntry>& verifier_registry() {
  static const std::vector<VerifierEntry> registry = build_registry();
  return registry;
}

const VerifierEntry* find_verifier(const std::string& id) {
  for (const auto& e : verifier_registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace linkgeom
