#include <gtest/gtest.h>

#include "linkgeom/constructions.hpp"
#include "linkgeom/errors.hpp"
#include "linkgeom/partitions.hpp"
#include "oracle.hpp"

using namespace linkgeom;

namespace {

bool gp(const Configuration& c) { return is_general_position(c).ok; }

// Exact replay of a certificate against raw coordinates.
bool oracle_check(const Configuration& cfg, const PartitionCertificate& cert) {
  const auto p = oracle::raw(cfg);
  std::vector<bool> used(cfg.size(), false);
  for (std::size_t k = 0; k < cert.blocks.size(); ++k) {
    mpq_class total = 0;
    std::vector<mpq_class> sum(cfg.dimension(), 0);
    for (std::size_t i = 0; i < cert.blocks[k].size(); ++i) {
      const std::size_t v = cert.blocks[k][i];
      if (used[v]) return false;
      used[v] = true;
      const mpq_class w = cert.coefficients[k][i].rational_part();
      if (w < 0) return false;
      total += w;
      for (std::size_t c = 0; c < cfg.dimension(); ++c) sum[c] += w * p[v][c];
    }
    if (total != 1) return false;
    for (std::size_t c = 0; c < cfg.dimension(); ++c) {
      if (sum[c] != cert.common_point[c].rational_part()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Radon, CentroidExample) {
  // triangle plus its centroid
  const Configuration c(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  const PartitionCertificate r = radon_partition(c);
  EXPECT_TRUE(validate_certificate(c, r));
  EXPECT_TRUE(oracle_check(c, r));
  EXPECT_EQ(r.common_point, (Point{1, 1}));
  ASSERT_EQ(r.blocks.size(), 2u);
  const bool singleton = r.blocks[0] == IndexSet{3} || r.blocks[1] == IndexSet{3};
  EXPECT_TRUE(singleton);
}

TEST(Radon, ConvexQuadrilateral) {
  const Configuration c(2, {{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  const PartitionCertificate r = radon_partition(c);
  EXPECT_TRUE(validate_certificate(c, r));
  EXPECT_EQ(r.common_point, (Point{1, 1}));
  EXPECT_EQ(r.blocks[0].size(), 2u);
  EXPECT_EQ(r.blocks[1].size(), 2u);
}

TEST(Radon, RandomSetsUpToR6) {
  for (std::size_t d = 1; d <= 6; ++d) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const Configuration c = random_configuration(d + 2, d, s * 7 + d);
      const PartitionCertificate r = radon_partition(c);
      ASSERT_TRUE(validate_certificate(c, r));
      ASSERT_TRUE(oracle_check(c, r));
      ASSERT_TRUE(hulls_common_point(c, r.blocks).feasible);
    }
  }
}

TEST(Radon, WrongSize) { EXPECT_THROW(radon_partition(moment_curve(5, 2)), GeometryError); }

TEST(Hulls, Examples) {
  const Configuration c(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}, {10, 10}, {11, 10}});
  const auto in = hulls_common_point(c, {{0, 1, 2}, {3}});
  ASSERT_TRUE(in.feasible);
  EXPECT_TRUE(validate_certificate(c, *in.certificate));
  EXPECT_FALSE(hulls_common_point(c, {{0, 1, 2}, {4, 5}}).feasible);
  EXPECT_FALSE(hulls_common_point(c, {{0, 1, 2}, {4, 5}}).certificate);
  // closed hulls: a vertex on the other segment counts
  const Configuration t(2, {{0, 0}, {4, 0}, {2, 0}, {2, 5}});
  EXPECT_TRUE(hulls_common_point(t, {{0, 1}, {2, 3}}).feasible);
  EXPECT_THROW(hulls_common_point(c, {{0, 1}, {1, 2}}), GeometryError);
}

TEST(Hulls, TamperedCertificateRejected) {
  const Configuration c(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  PartitionCertificate r = radon_partition(c);
  r.common_point = Point{1, 2};
  EXPECT_FALSE(validate_certificate(c, r));
}

TEST(Stirling, Values) {
  EXPECT_EQ(stirling2(6, 3), 90u);
  EXPECT_EQ(stirling2(7, 3), 301u);
  EXPECT_EQ(stirling2(9, 3), 3025u);
  EXPECT_EQ(stirling2(5, 5), 1u);
  EXPECT_EQ(stirling2(3, 4), 0u);
}

TEST(Tverberg, SevenPlanarPoints) {
  int done = 0;
  for (std::uint64_t s = 0; done < 100; ++s) {
    const Configuration c = random_configuration(7, 2, 400 + s);
    if (!gp(c)) continue;
    const TverbergSearch t = tverberg_partition(c, 3);
    ASSERT_TRUE(t.certificate) << s;
    ASSERT_EQ(t.certificate->blocks.size(), 3u);
    ASSERT_TRUE(validate_certificate(c, *t.certificate));
    ASSERT_TRUE(oracle_check(c, *t.certificate));
    ASSERT_LE(t.partitions_examined, t.partitions_total);
    ASSERT_EQ(t.partitions_total, 301u);
    ++done;
  }
}

TEST(Tverberg, TwoBlocksIsRadon) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Configuration c = random_configuration(5, 3, 900 + s);
    const TverbergSearch t = tverberg_partition(c, 2);
    ASSERT_TRUE(t.certificate);
    ASSERT_TRUE(validate_certificate(c, *t.certificate));
  }
}

TEST(Tverberg, MonotoneInPoints) {
  // adding a point keeps a partition available
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Configuration c = random_configuration(8, 2, 1300 + s);
    ASSERT_TRUE(tverberg_partition(c, 3).certificate);
  }
}

TEST(Tverberg, Counterexamples) {
  for (const auto& [d, r] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 3}, {3, 3}}) {
    const Configuration c = tverberg_counterexample(d, r);
    ASSERT_EQ(c.size(), (d + 1) * (r - 1));
    const TverbergSearch t = tverberg_partition(c, r);
    EXPECT_FALSE(t.certificate) << d << " " << r;
    EXPECT_EQ(t.partitions_examined, t.partitions_total);
    EXPECT_EQ(t.partitions_total, stirling2(c.size(), r));
  }
  EXPECT_EQ(tverberg_partition(tverberg_counterexample(2, 3), 3).partitions_total, 90u);
}

TEST(Tverberg, BudgetExceeded) {
  TverbergOptions o;
  o.budget = 10;
  try {
    tverberg_partition(moment_curve(7, 2), 3, o);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}
