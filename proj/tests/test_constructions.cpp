#include <gtest/gtest.h>

#include "linkgeom/constructions.hpp"
#include "linkgeom/errors.hpp"
#include "linkgeom/linking.hpp"
#include "linkgeom/verifiers.hpp"
#include "oracle.hpp"

using namespace linkgeom;

namespace {

std::vector<oracle::Idx> raw_simplices(const std::vector<SimplexRef>& s) {
  std::vector<oracle::Idx> out;
  for (const auto& x : s) out.push_back(x.vertices());
  return out;
}

bool oracle_embedded(const ProductGrid& g) {
  return oracle::embedded(oracle::raw(g.configuration()), raw_simplices(g.triangles()));
}

}  // namespace

TEST(MomentCurve, GeneralPosition) {
  EXPECT_TRUE(is_general_position(moment_curve(6, 3)).ok);
  EXPECT_TRUE(is_general_position(moment_curve(7, 4)).ok);
  const Configuration two = moment_curve(2, 1, {Scalar(-3), Scalar(5)});
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1], (Point{5}));
  EXPECT_EQ(moment_curve(3, 3)[2], (Point{3, 9, 27}));
  EXPECT_THROW(moment_curve(2, 2, {Scalar(1), Scalar(1)}), GeometryError);
}

TEST(HexagonHelix, Properties) {
  const Configuration h = hexagon_helix6();
  EXPECT_EQ(h.label(0), "A1");
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(h[i][2], Scalar(static_cast<long>(i + 1)));
  EXPECT_TRUE(triangles_linked(h, SimplexRef{0, 2, 4}, SimplexRef{1, 3, 5}).linked);
  EXPECT_EQ(verify_cgs(h).verdict, ParityReport::Verdict::kConfirmed);
}

TEST(RationalHelix, SixPointsEvenCounts) {
  const Configuration c = rational_helix(6);
  ASSERT_TRUE(is_general_position(c).ok);
  // exhaustive oracle: each segment against the surface of the other four
  const auto p = oracle::raw(c);
  for (const auto& seg : oracle::subsets(6, 2)) {
    oracle::Idx rest;
    for (std::size_t i = 0; i < 6; ++i) {
      if (i != seg[0] && i != seg[1]) rest.push_back(i);
    }
    std::size_t k = 0;
    for (const auto& face : oracle::subsets(rest, 3)) k += oracle::crosses(p, seg, face);
    EXPECT_EQ(k % 2, 0u);
  }
  for (std::size_t k : segment_surface_counts(c)) EXPECT_EQ(k % 2, 0u);
  EXPECT_EQ(verify_unlinking_r3(c).verdict, ParityReport::Verdict::kConfirmed);
}

TEST(RationalHelix, FourPoints) {
  const Configuration c = rational_helix(4);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(is_general_position(c).ok);
}

TEST(SimplexPlusInterior, Shapes) {
  const Configuration two = simplex_plus_interior(2);
  EXPECT_EQ(two.size(), 4u);
  EXPECT_EQ(count_interior_crossings(two, all_simplices(4, 2), true), 0u);
  const Configuration three = simplex_plus_interior(3);
  EXPECT_EQ(three.size(), 5u);
  EXPECT_EQ(three[4], (Point{Scalar(1, 4), Scalar(1, 4), Scalar(1, 4)}));
  EXPECT_TRUE(oracle::embedded(oracle::raw(three), raw_simplices(all_simplices(5, 3))));
  const Configuration four = simplex_plus_interior(4);
  EXPECT_EQ(four.size(), 6u);
  const auto p = oracle::raw(four);
  for (const auto& a : oracle::subsets(6, 3)) {
    for (const auto& b : oracle::subsets(6, 3)) {
      if (oracle::disjoint(a, b)) EXPECT_TRUE(oracle::common_vertices(p, a, b).empty());
    }
  }
}

TEST(Cone, OverGeneralBase) {
  const Configuration base = moment_curve(4, 3);
  const Configuration c = cone(Point{1, 2, 3, 5}, base);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c.label(0), "O");
  EXPECT_EQ(c[1], (Point{1, 1, 1, 0}));
  std::vector<SimplexRef> tris;
  for (std::size_t j = 1; j < 5; ++j) {
    for (std::size_t k = j + 1; k < 5; ++k) tris.push_back(SimplexRef{0, j, k});
  }
  EXPECT_TRUE(is_embedded(c, tris).embedded);
  EXPECT_TRUE(oracle::embedded(oracle::raw(c), raw_simplices(tris)));
}

TEST(Cone, TwoBasePoints) {
  const Configuration base(1, {{0}, {1}});
  const Configuration c = cone(Point{3, 1}, base);
  EXPECT_TRUE(is_embedded(c, {SimplexRef{0, 1, 2}}).embedded);
}

TEST(Cone, ApexInHyperplane) {
  try {
    cone(Point{1, 2, 0}, moment_curve(3, 2));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kApexInHyperplane);
  }
}

TEST(ProductTriangles, Counts) {
  EXPECT_EQ(product_triangles(2, 2).size(), 2u);
  EXPECT_EQ(product_triangles(3, 3).size(), 18u);
  EXPECT_TRUE(product_triangles(1, 5).empty());
  const auto sq = product_triangles(2, 2);
  // A11 A22 A12 and A11 A22 A21
  EXPECT_EQ(sq[0], (SimplexRef{0, 1, 3}));
  EXPECT_EQ(sq[1], (SimplexRef{0, 2, 3}));
  EXPECT_EQ(grid_label(1, 3), "A13");
  EXPECT_EQ(grid_label(1, 11), "A1_11");
}

TEST(ProductGrid, ShapeMismatch) {
  try {
    product_grid(2, 2, {{Point{0, 0}, Point{1, 0}}, {Point{0, 1}}});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
}

TEST(Cylinder, EmbeddedUpToEight) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const ProductGrid g = cylinder_grid(n);
    ASSERT_EQ(g.m(), 2u);
    ASSERT_EQ(g.configuration().size(), 2 * n);
    EXPECT_TRUE(is_embedded(g.configuration(), g.triangles()).embedded) << n;
    if (n <= 6) EXPECT_TRUE(oracle_embedded(g)) << n;
  }
}

TEST(Cylinder, ParallelogramHalvesShareOnlyTheirSide) {
  const ProductGrid g = cylinder_grid(5);
  // A_1p A_2q A_2p and A_1p A_2q A_1q
  const SimplexRef a{g.index(0, 1), g.index(1, 3), g.index(1, 1)};
  const SimplexRef b{g.index(0, 1), g.index(1, 3), g.index(0, 3)};
  EXPECT_EQ(classify_pair(g.configuration(), a, b).tag, PairClass::Tag::kCommonEdgeOnly);
  EXPECT_TRUE(oracle::proper_pair(oracle::raw(g.configuration()), a.vertices(), b.vertices()));
}

TEST(Torus, RotationHasOrderThree) {
  const Scalar c(-1, 2);
  const Scalar s = Scalar::quad(0, mpq_class(1, 2));
  auto rot = [&](const Point& p) { return Point{p[0], c * p[1] - s * p[2], s * p[1] + c * p[2]}; };
  for (const Point& seed : {Point{1, 0, 1}, Point{-1, 0, 1}, Point{0, 0, 2}, Point{0, 0, 3}}) {
    EXPECT_EQ(rot(rot(rot(seed))), seed);
  }
}

TEST(Torus, LinearRealizationOfK3K4) {
  const ProductGrid g = torus_k3n(4);
  EXPECT_EQ(g.configuration().field(), Scalar::Field::kQuadSqrt3);
  EXPECT_TRUE(is_linear_realization(product_hypergraph(3, 4), g.configuration()).embedded);
  EXPECT_TRUE(is_linear_realization(product_hypergraph(3, 3), torus_k3n(3).configuration()).embedded);
  EXPECT_THROW(torus_k3n(5), GeometryError);
}

TEST(K4n, CertifiedGrids) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const ProductGrid g = k4n_grid_r4(n);
    ASSERT_EQ(g.configuration().dimension(), 4u);
    EXPECT_TRUE(is_embedded(g.configuration(), g.triangles()).embedded) << n;
    if (n <= 3) EXPECT_TRUE(oracle_embedded(g)) << n;
  }
}
