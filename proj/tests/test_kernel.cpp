#include <gtest/gtest.h>

#include "linkgeom/constructions.hpp"
#include "linkgeom/errors.hpp"
#include "oracle.hpp"

using namespace linkgeom;

TEST(Scalar, SignExamples) {
  EXPECT_EQ(Scalar(0, 1).sign(), 0);
  EXPECT_EQ(Scalar::quad(-2, 1).sign(), -1);
  // 3 * 9 = 27 > 25, so sqrt3 > 5/3.
  EXPECT_GT(3 * 9, 25);
  EXPECT_EQ(Scalar::quad(mpq_class(-5, 3), 1).sign(), 1);
  EXPECT_EQ(Scalar::quad(mpq_class(5, 3), -1).sign(), -1);
  EXPECT_EQ(Scalar::quad(0, 0).sign(), 0);
}

TEST(Scalar, CanonicalForm) {
  const Scalar a(mpq_class(6, 4));
  EXPECT_EQ(a.rational_part(), mpq_class(3, 2));
  const Scalar b(mpq_class(a.rational_part()));
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_EQ(Scalar(-4, 6).to_string(), "-2/3");
  EXPECT_EQ(Scalar::quad(mpq_class(2, 4), mpq_class(-3, 9)).to_string(), "1/2-1/3*sqrt3");
}

TEST(Scalar, MixedArithmeticPromotes) {
  const Scalar s = Scalar::sqrt3();
  const Scalar x = s * s - Scalar(3);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ((Scalar(1) + s).field(), Scalar::Field::kQuadSqrt3);
  EXPECT_EQ((Scalar(1) / (Scalar(2) + s)), Scalar(2) - s);
}

TEST(Scalar, SignIsMultiplicative) {
  SplitMix64 rng(11);
  auto draw = [&](bool quad) {
    const mpq_class a(rng.symmetric(50), static_cast<long>(rng.below(9) + 1));
    if (!quad) return Scalar(a);
    return Scalar::quad(a, mpq_class(rng.symmetric(50), static_cast<long>(rng.below(9) + 1)));
  };
  for (int i = 0; i < 10000; ++i) {
    const Scalar x = draw(i % 2);
    const Scalar y = draw(i % 3 == 0);
    ASSERT_EQ((x * y).sign(), x.sign() * y.sign()) << x.to_string() << " " << y.to_string();
  }
}

TEST(Scalar, SignAgreesWithDecimal) {
  SplitMix64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const Scalar x = Scalar::quad(mpq_class(rng.symmetric(1000), 7), mpq_class(rng.symmetric(1000), 11));
    const double v = x.approx();
    if (std::abs(v) > 1e-9) {
      ASSERT_EQ(x.sign(), v > 0 ? 1 : -1);
    }
  }
}

TEST(Scalar, ParseReducedRational) {
  EXPECT_EQ(parse_reduced_rational("-3/4"), mpq_class(-3, 4));
  EXPECT_EQ(parse_reduced_rational("0/1"), mpq_class(0));
  EXPECT_THROW(parse_reduced_rational("2/4"), GeometryError);
  EXPECT_THROW(parse_reduced_rational("1/0"), GeometryError);
  EXPECT_THROW(parse_reduced_rational("1/-2"), GeometryError);
  EXPECT_THROW(parse_reduced_rational("abc"), GeometryError);
  EXPECT_EQ(format_rational(mpq_class(5)), "5/1");
}

TEST(Orientation, Examples) {
  const std::vector<Point> basis = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(orientation(basis), 1);
  EXPECT_EQ(orientation({{0, 0}, {1, 1}, {2, 2}}), 0);
  const Configuration m = moment_curve(4, 3);
  EXPECT_EQ(orientation(m, {0, 1, 2, 3}), 1);
  EXPECT_EQ(oracle::orient(oracle::raw(m), {0, 1, 2, 3}), 1);
  EXPECT_THROW(orientation({{0, 0}, {1, 1, 1}, {2, 2}}), GeometryError);
}

TEST(Orientation, Antisymmetric) {
  for (std::size_t d = 2; d <= 5; ++d) {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Configuration c = random_configuration(d + 1, d, s * 31 + d);
      IndexSet idx(d + 1);
      for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
      IndexSet swapped = idx;
      std::swap(swapped[0], swapped[d]);
      ASSERT_EQ(orientation(c, idx), -orientation(c, swapped));
      ASSERT_EQ(orientation(c, idx), oracle::orient(oracle::raw(c), idx));
    }
  }
}

TEST(GeneralPosition, Examples) {
  EXPECT_TRUE(is_general_position(moment_curve(7, 4)).ok);
  const Configuration sq(2, {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
  const auto r = is_general_position(sq);
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(oracle::orient(oracle::raw(sq), *r.witness), 0);
  EXPECT_TRUE(is_general_position(hexagon_helix6()).ok);
  // exhaustive 4-subset oracle on the hexagon helix
  const auto p = oracle::raw(hexagon_helix6());
  for (const auto& s : oracle::subsets(6, 4)) EXPECT_NE(oracle::orient(p, s), 0);
}

TEST(GeneralPosition, MomentCurves) {
  for (std::size_t d = 1; d <= 6; ++d) {
    for (std::size_t n = 2; n <= 12; ++n) ASSERT_TRUE(is_general_position(moment_curve(n, d)).ok) << n << " " << d;
  }
}

TEST(Configuration, Invariants) {
  EXPECT_THROW(Configuration(2, {{0, 0}, {0, 0}}), GeometryError);
  EXPECT_THROW(Configuration(2, {{0, 0}, {1, 0, 0}}), GeometryError);
  EXPECT_THROW(Configuration(2, {{0, 0}, {1, 0}}, {"a", "a"}), GeometryError);
  const Configuration c(1, {{Scalar(1)}, {Scalar::sqrt3()}});
  EXPECT_EQ(c.field(), Scalar::Field::kQuadSqrt3);
  EXPECT_EQ(c[0][0].field(), Scalar::Field::kQuadSqrt3);
  EXPECT_EQ(c.label(1), "P2");
}

TEST(SplitMix64, ReferenceOutput) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
}

namespace {

Scalar max_shift(const Configuration& a, const Configuration& b) {
  Scalar m(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t c = 0; c < a.dimension(); ++c) {
      Scalar diff = a[i][c] - b[i][c];
      if (diff.sign() < 0) diff = -diff;
      if (diff > m) m = diff;
    }
  }
  return m;
}

bool gp(const Configuration& c) { return is_general_position(c).ok; }

}  // namespace

TEST(Perturb, AlreadyGeneral) {
  const Configuration c = moment_curve(6, 3);
  const Configuration p = perturb(c, 3, gp);
  EXPECT_TRUE(gp(p));
  EXPECT_LE(max_shift(c, p), Scalar(1, 1024));
  const Configuration again = perturb(c, 3, gp);
  EXPECT_EQ(p.points(), again.points());
}

TEST(Perturb, BreaksCollinearity) {
  const Configuration c(2, {{0, 0}, {1, 1}, {2, 2}, {5, 0}, {0, 7}});
  ASSERT_FALSE(gp(c));
  const Configuration p = perturb(c, 9, gp);
  EXPECT_TRUE(gp(p));
  EXPECT_LT(max_shift(c, p), Scalar(1, 1024));
}

TEST(Perturb, KeepsDisjointTrianglesDisjoint) {
  // Four coplanar points among six.
  const Configuration c(3, {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {4, 4, 0}, {10, 10, 5}, {-3, 8, 9}});
  ASSERT_FALSE(gp(c));
  const auto tris = all_simplices(6, 3);
  auto meeting = [&](const Configuration& cfg) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < tris.size(); ++i) {
      for (std::size_t j = i + 1; j < tris.size(); ++j) {
        if (!tris[i].shares_vertex_with(tris[j]) && closed_simplices_meet(cfg, tris[i], tris[j])) out.emplace_back(i, j);
      }
    }
    return out;
  };
  const auto before = meeting(c);
  auto pred = [&](const Configuration& cfg) {
    if (!gp(cfg)) return false;
    for (const auto& pair : meeting(cfg)) {
      if (std::find(before.begin(), before.end(), pair) == before.end()) return false;
    }
    return true;
  };
  const Configuration p = perturb(c, 4, pred);
  EXPECT_TRUE(pred(p));
}

TEST(Perturb, ExhaustsOnImpossiblePredicate) {
  PerturbOptions o;
  o.first_exponent = 4;
  o.last_exponent = 6;
  EXPECT_THROW(perturb(moment_curve(4, 2), 1, [](const Configuration&) { return false; }, o), GeometryError);
}

TEST(Perturb, RejectsQuadInput) {
  EXPECT_THROW(perturb(torus_k3n(2).configuration(), 1, gp), GeometryError);
}

TEST(Subsets, Enumeration) {
  std::size_t count = 0;
  for_each_subset(7, 3, [&](const IndexSet&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 35u);
  EXPECT_EQ(binomial(11, 5), 462u);
}
