#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linkgeom/scalar.hpp"

namespace linkgeom {

using IndexSet = std::vector<std::size_t>;

struct Point {
  std::vector<Scalar> coords;

  Point() = default;
  explicit Point(std::vector<Scalar> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Scalar> c) : coords(c) {}

  std::size_t dimension() const { return coords.size(); }
  const Scalar& operator[](std::size_t i) const { return coords[i]; }
  Scalar& operator[](std::size_t i) { return coords[i]; }
  Scalar::Field field() const;

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(const Scalar& s, const Point& p);
};

/// Labeled points of one dimension. Immutable after construction; the
/// constructor enforces equal dimensions, one scalar field, unique labels and
/// pairwise distinct points.
class Configuration {
 public:
  Configuration(std::size_t dimension, std::vector<Point> points, std::vector<std::string> labels = {});

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  Scalar::Field field() const;

  /// Sub-configuration on `indices`, in that order, labels kept.
  Configuration subset(const IndexSet& indices) const;

 private:
  std::size_t dimension_;
  std::vector<Point> points_;
  std::vector<std::string> labels_;
};

/// Default labels "P1", "P2", ...
std::vector<std::string> default_labels(std::size_t n);

/// Sign of det[p1 - p0, ..., pd - p0] for d+1 points in R^d; positive for the
/// origin followed by the standard basis.
int orientation(const std::vector<Point>& pts);
int orientation(const Configuration& cfg, const IndexSet& indices);

/// True iff the given points are affinely independent.
bool affinely_independent(const Configuration& cfg, const IndexSet& indices);

struct GeneralPositionResult {
  bool ok = true;
  std::optional<IndexSet> witness;  // an affinely dependent subset
};

/// Every subset of min(d+1, n) points is affinely independent.
GeneralPositionResult is_general_position(const Configuration& cfg);

/// splitmix64; the state advances by the golden-ratio increment and the
/// output is the usual xor-shift-multiply finalizer of the new state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [-bound, bound], bound < 2^63, by rejection.
  std::int64_t symmetric(std::uint64_t bound);
  /// Uniform integer in [0, n), n > 0, by rejection.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// Independent seed for trial `index` of a campaign started from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct PerturbOptions {
  int first_exponent = 10;  // epsilon = 2^-k starts at k = first_exponent
  int last_exponent = 60;
  int attempts_per_exponent = 4;
};

/// Shifts every coordinate by an independent offset drawn from
/// {-(2^k-1), ..., 2^k-1} / 2^(2k) (so |offset| < 2^-k), increasing k after
/// `attempts_per_exponent` failed draws until `predicate` accepts. Throws
/// PERTURB_EXHAUSTED past `last_exponent`.
Configuration perturb(const Configuration& cfg, std::uint64_t seed,
                      const std::function<bool(const Configuration&)>& predicate,
                      const PerturbOptions& options = {});

/// Random rational point set with coordinates num / 2^bits, |num| < 2^bits.
Configuration random_configuration(std::size_t n, std::size_t d, std::uint64_t seed, int bits = 16);

/// Enumerates all k-subsets of {0..n-1} in lexicographic order; stops early
/// when `visit` returns false.
void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const IndexSet&)>& visit);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace linkgeom
