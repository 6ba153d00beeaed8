#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linkgeom/constructions.hpp"

namespace linkgeom {

/// One witness is a short list of index tuples, e.g. two triangles.
using Witness = std::vector<IndexSet>;

struct ParityReport {
  enum class Claim { kOdd, kEven, kWitnessExists, kSearch };
  enum class Verdict { kConfirmed, kViolated, kDegenerate };

  std::string theorem_id;
  std::string input_summary;
  std::size_t count = 0;
  Claim claim = Claim::kOdd;
  Verdict verdict = Verdict::kConfirmed;
  std::vector<Witness> witnesses;
  std::optional<std::string> degeneracy;  // why the general-position branch was skipped
};

const char* claim_name(ParityReport::Claim claim);
const char* verdict_name(ParityReport::Verdict verdict);

// Arity and dimension violations throw INVALID_ARGUMENT / DIMENSION_MISMATCH;
// every other degeneracy is reported in the verdict.

/// 5 points in R^2: crossings of vertex-disjoint segments, odd.
ParityReport verify_plane_intersection(const Configuration& cfg);
/// 3 + 3 points in R^2 (indices 0-2 and 3-5): crossings among the 9
/// bipartite segments, odd.
ParityReport verify_k33_plane(const Configuration& cfg);
/// 4 red (0-3) + 2 blue (4, 5) points in R^2: some red split R1R2 | R3R4
/// with segment R3R4 crossing the loop R1 B1 R2 B2 an odd number of times.
ParityReport verify_rlt_pre(const Configuration& cfg);
/// 5 points in R^2: segments crossing the complementary triangle's outline
/// exactly once, even.
ParityReport verify_unlinking_plane(const Configuration& cfg);
/// 6 points in R^3: linked disjoint triangle pairs, odd.
ParityReport verify_cgs(const Configuration& cfg);
/// 6 points in R^3: a disjoint closed segment and closed triangle that meet.
ParityReport verify_intersection_r3(const Configuration& cfg);
/// 6 points in R^3: segments meeting the complementary tetrahedron's surface
/// exactly once, even.
ParityReport verify_unlinking_r3(const Configuration& cfg);
/// 4 red (0-3) + 4 blue (4-7) points in R^3: a linked pair of complementary
/// alternating quadrangular loops.
ParityReport verify_sachs(const Configuration& cfg);
/// 7 points in R^4: crossings of disjoint triangles, odd.
ParityReport verify_vkf(const Configuration& cfg);
/// 7 points in R^4: total crossings of each triangle with the complementary
/// tetrahedron's surface, even.
ParityReport verify_unlinking_r4(const Configuration& cfg);
/// 3 + 3 + 3 points in R^4: two disjoint intersecting triangles, each with
/// one vertex per triple.
ParityReport verify_join3(const Configuration& cfg);
/// n + 3 points in R^n, 1 <= n <= max_n.
ParityReport verify_stat_il(const Configuration& cfg, std::size_t max_n = 8);
/// Disjoint intersecting closed triangles of the grid. Shapes (5,3), (4,4)
/// in R^3 and (5,5) in R^4 (either order) carry the existence claim; other
/// shapes report a witness or certified absence.
ParityReport verify_product(const ProductGrid& grid);
/// 6 points 0..5 in R^3 and deleted = {2}, {2,3} or {2,3,4}: when the
/// triangles 0jk (1j not deleted) with the segments 1k for deleted k form an
/// embedded set, one of the pairs 01k / complement is linked.
ParityReport verify_deleted_face_linking(const Configuration& cfg, const std::vector<std::size_t>& deleted);

/// Per-segment crossing counts with the complementary tetrahedron surfaces,
/// in lexicographic segment order (6 points in R^3).
std::vector<std::size_t> segment_surface_counts(const Configuration& cfg);

struct VerifyOptions {
  std::size_t max_n = 8;
  std::size_t stat_il_n = 4;         // dimension for random stat-il inputs
  std::size_t grid_m = 5;            // shape for random product inputs
  std::size_t grid_n = 3;
  std::size_t grid_dim = 3;
  std::vector<std::size_t> deleted = {2};
};

struct VerifierEntry {
  std::string id;
  std::string description;
  /// Runs the verifier on a point set (grid-shaped input for product).
  std::function<ParityReport(const Configuration&, const VerifyOptions&)> run;
  /// Seeded random input satisfying the verifier's arity and, where random
  /// points rarely do, its precondition.
  std::function<Configuration(std::uint64_t seed, int bits, const VerifyOptions&)> sample;
};

const std::vector<VerifierEntry>& verifier_registry();
const VerifierEntry* find_verifier(const std::string& id);

}  // namespace linkgeom
