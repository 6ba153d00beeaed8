#include <gtest/gtest.h>

#include "linkgeom/constructions.hpp"
#include "linkgeom/errors.hpp"
#include "oracle.hpp"

using namespace linkgeom;

namespace {

bool gp(const Configuration& c) { return is_general_position(c).ok; }

std::vector<oracle::Idx> raw_simplices(const std::vector<SimplexRef>& s) {
  std::vector<oracle::Idx> out;
  for (const auto& x : s) out.push_back(x.vertices());
  return out;
}

}  // namespace

TEST(ClassifyPair, TetrahedronFaces) {
  const Configuration c(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(classify_pair(c, SimplexRef{0, 1, 2}, SimplexRef{0, 1, 3}).tag, PairClass::Tag::kCommonEdgeOnly);
  EXPECT_EQ(classify_pair(c, SimplexRef{0, 1}, SimplexRef{0, 2, 3}).tag, PairClass::Tag::kCommonVertexOnly);
}

TEST(ClassifyPair, QuadrilateralDiagonals) {
  const Configuration c(2, {{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  const PairClass p = classify_pair(c, SimplexRef{0, 2}, SimplexRef{1, 3});
  EXPECT_EQ(p.tag, PairClass::Tag::kImproper);
  ASSERT_TRUE(p.witness);
  EXPECT_EQ(*p.witness, (Point{1, 1}));
  EXPECT_EQ(classify_pair(c, SimplexRef{0, 1}, SimplexRef{2, 3}).tag, PairClass::Tag::kDisjoint);
}

TEST(ClassifyPair, CoplanarOverlapWithSharedVertex) {
  // triangles share vertex 0 and overlap in the plane
  const Configuration c(2, {{0, 0}, {4, 0}, {0, 4}, {4, 1}, {1, 4}});
  EXPECT_EQ(classify_pair(c, SimplexRef{0, 1, 2}, SimplexRef{0, 3, 4}).tag, PairClass::Tag::kImproper);
  // folded along a shared side in the plane
  EXPECT_EQ(classify_pair(c, SimplexRef{0, 1, 2}, SimplexRef{0, 1, 3}).tag, PairClass::Tag::kImproper);
  EXPECT_EQ(classify_pair(c, SimplexRef{0, 1, 2}, SimplexRef{0, 1, 2}).tag, PairClass::Tag::kImproper);
}

TEST(ClassifyPair, SymmetricAndAgreesWithOracle) {
  std::size_t improper = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const std::size_t d = 2 + s % 3;
    const Configuration c = random_configuration(6, d, 40 + s, 3);
    const auto p = oracle::raw(c);
    // small coordinates so that touching and sharing happen often
    const SimplexRef a = s % 2 ? SimplexRef{0, 1, 2} : SimplexRef{0, 1};
    const SimplexRef b = s % 5 == 0 ? SimplexRef{3, 4, 5} : (s % 5 == 1 ? SimplexRef{0, 3, 4} : SimplexRef{0, 1, 5});
    const PairClass x = classify_pair(c, a, b);
    const PairClass y = classify_pair(c, b, a);
    ASSERT_EQ(x.tag, y.tag) << s;
    const bool proper = oracle::proper_pair(p, a.vertices(), b.vertices());
    ASSERT_EQ(x.tag != PairClass::Tag::kImproper, proper) << s;
    if (x.tag == PairClass::Tag::kDisjoint) ASSERT_TRUE(oracle::common_vertices(p, a.vertices(), b.vertices()).empty());
    improper += !proper;
  }
  EXPECT_GT(improper, 0u);
}

TEST(ClassifyPair, ConsistentWithTransversalPoint) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const std::size_t d = 2 + s % 2;
    const Configuration c = random_configuration(d + 2, d, 800 + s);
    if (!gp(c)) continue;
    const SimplexRef a{0, 1};
    const SimplexRef b = d == 2 ? SimplexRef{2, 3} : SimplexRef{2, 3, 4};
    ASSERT_EQ(classify_pair(c, a, b).tag == PairClass::Tag::kImproper, transversal_point(c, a, b).has_value());
  }
}

TEST(Embedded, MomentCurveSegmentsInR3) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const Configuration c = moment_curve(n, 3);
    EXPECT_TRUE(is_embedded(c, all_simplices(n, 2)).embedded) << n;
  }
  EXPECT_TRUE(oracle::embedded(oracle::raw(moment_curve(4, 3)), raw_simplices(all_simplices(4, 2))));
}

TEST(Embedded, MomentCurveTrianglesInR5) {
  for (std::size_t n = 5; n <= 8; ++n) {
    EXPECT_TRUE(is_embedded(moment_curve(n, 5), all_simplices(n, 3)).embedded) << n;
  }
  EXPECT_TRUE(oracle::embedded(oracle::raw(moment_curve(7, 5)), raw_simplices(all_simplices(7, 3))));
}

TEST(Embedded, SimplexPlusInterior) {
  EXPECT_TRUE(is_embedded(simplex_plus_interior(3), all_simplices(5, 3)).embedded);
  EXPECT_TRUE(is_embedded(simplex_plus_interior(4), all_simplices(6, 3)).embedded);
  EXPECT_TRUE(is_linear_realization(Hypergraph2::complete(5), simplex_plus_interior(3)).embedded);
}

TEST(Embedded, SixPointsInR3NeverEmbedded) {
  int done = 0;
  for (std::uint64_t s = 0; done < 100; ++s) {
    const Configuration c = random_configuration(6, 3, 3000 + s);
    if (!gp(c)) continue;
    const EmbeddingCheck e = is_embedded(c, all_simplices(6, 3));
    ASSERT_FALSE(e.embedded);
    ASSERT_TRUE(e.witness);
    ASSERT_FALSE(oracle::proper_pair(oracle::raw(c), e.witness->first.vertices(), e.witness->second.vertices()));
    ++done;
  }
}

TEST(Embedded, K7NotRealizableInR4) {
  int done = 0;
  for (std::uint64_t s = 0; done < 30; ++s) {
    const Configuration c = random_configuration(7, 4, 6000 + s);
    if (!gp(c)) continue;
    const EmbeddingCheck e = is_linear_realization(Hypergraph2::complete(7), c);
    ASSERT_FALSE(e.embedded);
    ASSERT_TRUE(e.witness);
    ASSERT_FALSE(oracle::proper_pair(oracle::raw(c), e.witness->first.vertices(), e.witness->second.vertices()));
    ++done;
  }
}

TEST(Realization, VertexMapAndDegenerateFaces) {
  const Configuration c = simplex_plus_interior(3);
  const std::vector<std::size_t> reversed = {4, 3, 2, 1, 0};
  EXPECT_TRUE(is_linear_realization(Hypergraph2::complete(5), c, reversed).embedded);
  EXPECT_THROW(is_linear_realization(Hypergraph2::complete(5), c, {0, 0, 1, 2, 3}), GeometryError);
  const Configuration flat(2, {{0, 0}, {1, 1}, {2, 2}});
  try {
    is_linear_realization(Hypergraph2(3, {SimplexRef{0, 1, 2}}), flat);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateFace);
  }
}

TEST(Realization, ExtraEdges) {
  // segment piercing a triangle
  const Configuration c(3, {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {1, 1, -1}, {1, 1, 1}});
  EXPECT_FALSE(is_linear_realization(Hypergraph2(5, {SimplexRef{0, 1, 2}}, {SimplexRef{3, 4}}), c).embedded);
  EXPECT_TRUE(is_linear_realization(Hypergraph2(5, {SimplexRef{0, 1, 2}}, {SimplexRef{0, 4}}), c).embedded);
}

TEST(Hypergraph, Validation) {
  EXPECT_THROW(Hypergraph2(3, {SimplexRef{0, 1, 3}}), GeometryError);
  EXPECT_THROW(Hypergraph2(3, {SimplexRef{0, 1, 2}, SimplexRef{0, 1, 2}}), GeometryError);
  EXPECT_EQ(Hypergraph2::complete(6).faces().size(), 20u);
  EXPECT_EQ(pair_class_name(PairClass::Tag::kCommonEdgeOnly), std::string("COMMON_EDGE_ONLY"));
}

TEST(SeparatedSides, Examples) {
  const Configuration c(2, {{1, 1}, {10, 1}, {0, 0}, {5, 0}, {0, 5}});
  EXPECT_TRUE(separated_sides(c, 0, 1, SimplexRef{2, 3, 4}));
  const Configuration d(2, {{10, 1}, {10, 3}, {0, 0}, {5, 0}, {0, 5}});
  EXPECT_FALSE(separated_sides(d, 0, 1, SimplexRef{2, 3, 4}));
  // passes through the whole triangle: two crossings
  const Configuration e(2, {{-1, 1}, {10, 2}, {0, 0}, {5, 0}, {0, 5}});
  EXPECT_FALSE(separated_sides(e, 0, 1, SimplexRef{2, 3, 4}));
}

TEST(SeparatedSides, EmbeddedPlaneSegments) {
  // all segments but 01 embedded: 0 and 1 lie on different sides of 234
  int found = 0;
  for (std::uint64_t s = 0; found < 50 && s < 5000; ++s) {
    const Configuration c = random_configuration(5, 2, 9000 + s);
    if (!gp(c)) continue;
    const SimplexRef tri{2, 3, 4};
    const auto segs = all_simplices(5, 2);
    std::vector<SimplexRef> without;
    for (const auto& x : segs) {
      if (!(x == SimplexRef{0, 1})) without.push_back(x);
    }
    if (!is_embedded(c, without).embedded) continue;
    ++found;
    EXPECT_TRUE(separated_sides(c, 0, 1, tri)) << s;
  }
  EXPECT_GT(found, 0);
}

TEST(ProbePoints, EveryProbeSeesATriangle) {
  const Configuration base = simplex_plus_interior(3);
  const auto tris = all_simplices(5, 3);
  SplitMix64 rng(2024);
  int done = 0;
  while (done < 1000) {
    std::vector<Point> pts = base.points();
    Point x;
    for (int c = 0; c < 3; ++c) x.coords.emplace_back(mpq_class(rng.symmetric(1 << 10), 1 << 9));
    pts.push_back(x);
    bool distinct = true;
    for (const auto& p : base.points()) distinct = distinct && !(p == x);
    if (!distinct) continue;
    const Configuration c(3, pts);
    if (!gp(c)) continue;
    bool hit = false;
    for (std::size_t i = 0; i < 5 && !hit; ++i) {
      for (const auto& t : tris) {
        if (std::find(t.vertices().begin(), t.vertices().end(), i) != t.vertices().end()) continue;
        if (closed_simplices_meet(c, SimplexRef{i, 5}, t)) {
          hit = true;
          break;
        }
      }
    }
    ASSERT_TRUE(hit) << done;
    ++done;
  }
}
