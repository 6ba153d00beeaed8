#include "linkgeom/kernel.hpp"

#include <algorithm>
#include <set>

#include "linkgeom/errors.hpp"
#include "linkgeom/linalg.hpp"

namespace linkgeom {

Scalar::Field Point::field() const {
  for (const auto& c : coords) {
    if (!c.is_rational()) return Scalar::Field::kQuadSqrt3;
  }
  return Scalar::Field::kRational;
}

Point operator+(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) throw GeometryError(ErrorCode::kDimensionMismatch, "point sum");
  Point r = a;
  for (std::size_t i = 0; i < r.dimension(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) throw GeometryError(ErrorCode::kDimensionMismatch, "point difference");
  Point r = a;
  for (std::size_t i = 0; i < r.dimension(); ++i) r[i] -= b[i];
  return r;
}

Point operator*(const Scalar& s, const Point& p) {
  Point r = p;
  for (auto& c : r.coords) c *= s;
  return r;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("P" + std::to_string(i + 1));
  return out;
}

Configuration::Configuration(std::size_t dimension, std::vector<Point> points, std::vector<std::string> labels)
    : dimension_(dimension), points_(std::move(points)), labels_(std::move(labels)) {
  if (dimension_ < 1) throw GeometryError(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  if (labels_.empty()) labels_ = default_labels(points_.size());
  if (labels_.size() != points_.size()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "label count differs from point count");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw GeometryError(ErrorCode::kInvalidArgument, "duplicate label " + l);
  }
  bool quad = false;
  for (const auto& p : points_) {
    if (p.dimension() != dimension_) {
      throw GeometryError(ErrorCode::kDimensionMismatch, "point of dimension " + std::to_string(p.dimension()) +
                                                             " in a configuration of dimension " +
                                                             std::to_string(dimension_));
    }
    for (const auto& c : p.coords) quad = quad || !c.is_rational();
  }
  // One variant for all coordinates.
  if (quad) {
    for (auto& p : points_) {
      for (auto& c : p.coords) {
        if (c.is_rational()) c = c.as_quad();
      }
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw GeometryError(ErrorCode::kInvalidArgument, "points " + labels_[i] + " and " + labels_[j] + " coincide");
      }
    }
  }
}

Scalar::Field Configuration::field() const {
  if (points_.empty() || points_[0].coords.empty()) return Scalar::Field::kRational;
  return points_[0][0].field();
}

Configuration Configuration::subset(const IndexSet& indices) const {
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (auto i : indices) {
    pts.push_back(points_.at(i));
    labels.push_back(labels_.at(i));
  }
  return Configuration(dimension_, std::move(pts), std::move(labels));
}

int orientation(const std::vector<Point>& pts) {
  if (pts.empty()) throw GeometryError(ErrorCode::kInvalidArgument, "orientation of no points");
  const std::size_t d = pts[0].dimension();
  if (pts.size() != d + 1) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "orientation needs d+1 points in R^d");
  }
  Matrix m;
  m.reserve(d);
  for (std::size_t i = 1; i <= d; ++i) {
    if (pts[i].dimension() != d) throw GeometryError(ErrorCode::kDimensionMismatch, "orientation point dimension");
    m.push_back((pts[i] - pts[0]).coords);
  }
  return determinant_sign(std::move(m));
}

int orientation(const Configuration& cfg, const IndexSet& indices) {
  std::vector<Point> pts;
  for (auto i : indices) pts.push_back(cfg[i]);
  return orientation(pts);
}

bool affinely_independent(const Configuration& cfg, const IndexSet& indices) {
  if (indices.size() <= 1) return true;
  if (indices.size() > cfg.dimension() + 1) return false;
  Matrix m;
  for (std::size_t i = 1; i < indices.size(); ++i) m.push_back((cfg[indices[i]] - cfg[indices[0]]).coords);
  if (m.size() == cfg.dimension()) return determinant_sign(std::move(m)) != 0;
  return rank(m) == m.size();
}

GeneralPositionResult is_general_position(const Configuration& cfg) {
  GeneralPositionResult result;
  const std::size_t k = std::min(cfg.dimension() + 1, cfg.size());
  for_each_subset(cfg.size(), k, [&](const IndexSet& s) {
    if (affinely_independent(cfg, s)) return true;
    result.ok = false;
    result.witness = s;
    return false;
  });
  return result;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::int64_t SplitMix64::symmetric(std::uint64_t bound) {
  return static_cast<std::int64_t>(below(2 * bound + 1)) - static_cast<std::int64_t>(bound);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  return g.next();
}

Configuration perturb(const Configuration& cfg, std::uint64_t seed,
                      const std::function<bool(const Configuration&)>& predicate, const PerturbOptions& options) {
  if (cfg.field() != Scalar::Field::kRational) {
    throw GeometryError(ErrorCode::kInvalidArgument, "perturb needs rational coordinates");
  }
  if (options.last_exponent > 62) throw GeometryError(ErrorCode::kInvalidArgument, "exponent above 62");
  SplitMix64 rng(seed);
  for (int k = options.first_exponent; k <= options.last_exponent; ++k) {
    const std::uint64_t bound = (std::uint64_t{1} << k) - 1;
    mpz_class den = 1;
    den <<= 2 * k;
    for (int attempt = 0; attempt < options.attempts_per_exponent; ++attempt) {
      std::vector<Point> pts = cfg.points();
      for (auto& p : pts) {
        for (auto& c : p.coords) {
          mpq_class offset(mpz_class(static_cast<long>(rng.symmetric(bound))), den);
          offset.canonicalize();
          c += Scalar(offset);
        }
      }
      try {
        Configuration candidate(cfg.dimension(), std::move(pts), cfg.labels());
        if (predicate(candidate)) return candidate;
      } catch (const GeometryError&) {
        // coinciding points after the shift; draw again
      }
    }
  }
  throw GeometryError(ErrorCode::kPerturbExhausted, "no accepted perturbation up to epsilon 2^-" +
                                                        std::to_string(options.last_exponent));
}

Configuration random_configuration(std::size_t n, std::size_t d, std::uint64_t seed, int bits) {
  SplitMix64 rng(seed);
  const std::uint64_t bound = (std::uint64_t{1} << bits) - 1;
  mpz_class den = 1;
  den <<= bits;
  for (;;) {
    std::vector<Point> pts(n);
    for (auto& p : pts) {
      p.coords.reserve(d);
      for (std::size_t i = 0; i < d; ++i) {
        mpq_class q(mpz_class(static_cast<long>(rng.symmetric(bound))), den);
        q.canonicalize();
        p.coords.emplace_back(q);
      }
    }
    try {
      return Configuration(d, std::move(pts));
    } catch (const GeometryError&) {
      // two points drew the same coordinates; try again
    }
  }
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const IndexSet&)>& visit) {
  if (k > n) return;
  IndexSet s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    if (!visit(s)) return;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace linkgeom
