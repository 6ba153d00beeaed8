#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "linkgeom/kernel.hpp"

namespace linkgeom {

/// Disjoint blocks of point indices whose convex hulls share `common_point`;
/// coefficients[k][i] is the weight of blocks[k][i].
struct PartitionCertificate {
  std::vector<IndexSet> blocks;
  Point common_point;
  std::vector<std::vector<Scalar>> coefficients;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<PartitionCertificate> certificate;
};

/// Recomputes every convex-combination equation of the certificate from the
/// configuration: weights nonnegative, summing to 1 per block, reproducing
/// the common point exactly, blocks disjoint.
bool validate_certificate(const Configuration& cfg, const PartitionCertificate& cert);

/// Whether the convex hulls of the blocks share a point, decided by the
/// exact simplex method.
FeasibilityResult hulls_common_point(const Configuration& cfg, const std::vector<IndexSet>& blocks);

/// Splits d+2 points in R^d by the sign of an exact affine dependence.
/// Points with zero coefficient join the nonnegative block.
PartitionCertificate radon_partition(const Configuration& cfg);

struct TverbergOptions {
  std::uint64_t budget = 10'000'000;  // maximum number of partitions to enumerate
};

struct TverbergSearch {
  std::optional<PartitionCertificate> certificate;  // nothing = certified absence
  std::uint64_t partitions_examined = 0;
  std::uint64_t partitions_total = 0;  // Stirling number S(N, r)
};

/// Stirling number of the second kind; saturates at UINT64_MAX.
std::uint64_t stirling2(std::size_t n, std::size_t k);

/// Enumerates unordered partitions of all points into r nonempty blocks by
/// restricted-growth strings and returns the first whose hulls share a point.
/// A partial assignment that already has r feasible blocks is completed
/// directly, because adding points to a block never destroys feasibility.
/// Throws BUDGET_EXCEEDED when S(N, r) exceeds the budget.
TverbergSearch tverberg_partition(const Configuration& cfg, std::size_t r, const TverbergOptions& options = {});

/// (d+1)(r-1) points in d+1 tight clusters of r-1 points around the vertices
/// of the standard simplex; the cluster radius is halved until exhaustive
/// enumeration certifies that no r-partition has a common point.
Configuration tverberg_counterexample(std::size_t d, std::size_t r, const TverbergOptions& options = {});

}  // namespace linkgeom
