#include "linkgeom/partitions.hpp"

#include <algorithm>
#include <set>

#include "linkgeom/errors.hpp"
#include "linkgeom/lp.hpp"

namespace linkgeom {

bool validate_certificate(const Configuration& cfg, const PartitionCertificate& cert) {
  if (cert.blocks.size() != cert.coefficients.size()) return false;
  if (cert.common_point.dimension() != cfg.dimension()) return false;
  std::set<std::size_t> used;
  for (std::size_t k = 0; k < cert.blocks.size(); ++k) {
    const auto& block = cert.blocks[k];
    const auto& lambda = cert.coefficients[k];
    if (block.empty() || block.size() != lambda.size()) return false;
    Scalar sum(0);
    Point acc(std::vector<Scalar>(cfg.dimension(), Scalar(0)));
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] >= cfg.size() || !used.insert(block[i]).second) return false;
      if (lambda[i].sign() < 0) return false;
      sum += lambda[i];
      acc = acc + lambda[i] * cfg[block[i]];
    }
    if (!(sum == Scalar(1)) || !(acc == cert.common_point)) return false;
  }
  return true;
}

FeasibilityResult hulls_common_point(const Configuration& cfg, const std::vector<IndexSet>& blocks) {
  if (blocks.empty()) throw GeometryError(ErrorCode::kInvalidArgument, "no blocks");
  std::set<std::size_t> seen;
  std::vector<std::size_t> offset;
  std::size_t nvars = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw GeometryError(ErrorCode::kInvalidArgument, "empty block");
    for (auto i : b) {
      if (i >= cfg.size()) throw GeometryError(ErrorCode::kInvalidArgument, "block index out of range");
      if (!seen.insert(i).second) throw GeometryError(ErrorCode::kInvalidArgument, "blocks are not disjoint");
    }
    offset.push_back(nvars);
    nvars += b.size();
  }
  const std::size_t d = cfg.dimension();
  Matrix a;
  Vector rhs;
  // Block 0 against every other block, coordinate by coordinate.
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    for (std::size_t c = 0; c < d; ++c) {
      Vector row(nvars, Scalar(0));
      for (std::size_t i = 0; i < blocks[0].size(); ++i) row[offset[0] + i] = cfg[blocks[0][i]][c];
      for (std::size_t i = 0; i < blocks[k].size(); ++i) row[offset[k] + i] = -cfg[blocks[k][i]][c];
      a.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    Vector row(nvars, Scalar(0));
    for (std::size_t i = 0; i < blocks[k].size(); ++i) row[offset[k] + i] = Scalar(1);
    a.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  FeasibilityResult out;
  const auto x = find_feasible(a, rhs);
  if (!x) return out;
  PartitionCertificate cert;
  cert.blocks = blocks;
  cert.common_point = Point(std::vector<Scalar>(d, Scalar(0)));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    std::vector<Scalar> lambda(x->begin() + static_cast<std::ptrdiff_t>(offset[k]),
                               x->begin() + static_cast<std::ptrdiff_t>(offset[k] + blocks[k].size()));
    if (k == 0) {
      for (std::size_t i = 0; i < blocks[0].size(); ++i) cert.common_point = cert.common_point + lambda[i] * cfg[blocks[0][i]];
    }
    cert.coefficients.push_back(std::move(lambda));
  }
  out.feasible = true;
  out.certificate = std::move(cert);
  return out;
}

PartitionCertificate radon_partition(const Configuration& cfg) {
  const std::size_t d = cfg.dimension();
  if (cfg.size() != d + 2) {
    throw GeometryError(ErrorCode::kInvalidArgument, "Radon partition needs exactly d+2 points");
  }
  // Columns are the lifted points (x, 1); a kernel vector is an affine dependence.
  Matrix m(d + 1, Vector(d + 2, Scalar(0)));
  for (std::size_t j = 0; j < d + 2; ++j) {
    for (std::size_t c = 0; c < d; ++c) m[c][j] = cfg[j][c];
    m[d][j] = Scalar(1);
  }
  const Vector dep = kernel_vector(m);
  PartitionCertificate cert;
  cert.blocks.resize(2);
  Scalar total(0);
  for (std::size_t j = 0; j < dep.size(); ++j) {
    if (dep[j].sign() >= 0) {
      cert.blocks[0].push_back(j);
      total += dep[j];
    } else {
      cert.blocks[1].push_back(j);
    }
  }
  cert.coefficients.resize(2);
  cert.common_point = Point(std::vector<Scalar>(d, Scalar(0)));
  for (auto j : cert.blocks[0]) {
    cert.coefficients[0].push_back(dep[j] / total);
    cert.common_point = cert.common_point + (dep[j] / total) * cfg[j];
  }
  for (auto j : cert.blocks[1]) cert.coefficients[1].push_back(-dep[j] / total);
  return cert;
}

std::uint64_t stirling2(std::size_t n, std::size_t k) {
  // S(n, k) = k S(n-1, k) + S(n-1, k-1), saturating.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      const unsigned __int128 v = static_cast<unsigned __int128>(j) * row[j] + row[j - 1];
      row[j] = v > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(v);
    }
    row[0] = 0;
  }
  return row[k];
}

namespace {

class TverbergEnumerator {
 public:
  TverbergEnumerator(const Configuration& cfg, std::size_t r) : cfg_(cfg), r_(r), label_(cfg.size(), 0) {}

  std::optional<PartitionCertificate> run() {
    label_[0] = 0;
    if (descend(1, 1)) return std::move(found_);
    return std::nullopt;
  }

  std::uint64_t examined() const { return examined_; }

 private:
  std::vector<IndexSet> blocks_of(std::size_t prefix) const {
    std::vector<IndexSet> blocks(r_);
    for (std::size_t i = 0; i < prefix; ++i) blocks[label_[i]].push_back(i);
    return blocks;
  }

  // Prefix label_[0..pos) uses blocks 0..used-1.
  bool descend(std::size_t pos, std::size_t used) {
    const std::size_t n = label_.size();
    if (used == r_ && pos < n) {
      // All blocks are open; feasibility now is monotone in the remaining points.
      const auto res = hulls_common_point(cfg_, blocks_of(pos));
      if (res.feasible) {
        for (std::size_t i = pos; i < n; ++i) label_[i] = 0;
        examined_ += 1;
        return finish();
      }
    }
    if (pos == n) {
      if (used != r_) return false;
      ++examined_;
      return finish();
    }
    // Not enough points left to open the missing blocks.
    if (n - pos < r_ - used) return false;
    const std::size_t top = std::min(used, r_ - 1);
    for (std::size_t b = 0; b <= top; ++b) {
      label_[pos] = b;
      if (descend(pos + 1, std::max(used, b + 1))) return true;
    }
    return false;
  }

  bool finish() {
    const auto res = hulls_common_point(cfg_, blocks_of(label_.size()));
    if (!res.feasible) return false;
    found_ = res.certificate;
    return true;
  }

  const Configuration& cfg_;
  std::size_t r_;
  std::vector<std::size_t> label_;
  std::optional<PartitionCertificate> found_;
  std::uint64_t examined_ = 0;
};

}  // namespace

TverbergSearch tverberg_partition(const Configuration& cfg, std::size_t r, const TverbergOptions& options) {
  if (r < 2) throw GeometryError(ErrorCode::kInvalidArgument, "Tverberg search needs r >= 2");
  TverbergSearch out;
  out.partitions_total = stirling2(cfg.size(), r);
  if (out.partitions_total > options.budget) {
    throw GeometryError(ErrorCode::kBudgetExceeded, std::to_string(out.partitions_total) +
                                                         " partitions exceed the budget of " +
                                                         std::to_string(options.budget));
  }
  if (cfg.size() < r) return out;
  TverbergEnumerator e(cfg, r);
  out.certificate = e.run();
  out.partitions_examined = e.examined();
  return out;
}

Configuration tverberg_counterexample(std::size_t d, std::size_t r, const TverbergOptions& options) {
  if (d < 1 || r < 2) throw GeometryError(ErrorCode::kInvalidArgument, "need d >= 1 and r >= 2");
  // Offsets of the cluster members: distinct moment-curve directions.
  std::vector<Point> offsets;
  for (std::size_t j = 0; j + 1 < r; ++j) {
    Point p(std::vector<Scalar>(d, Scalar(0)));
    Scalar t(static_cast<long>(j + 1));
    Scalar power = t;
    for (std::size_t c = 0; c < d; ++c) {
      p[c] = power;
      power *= t;
    }
    offsets.push_back(std::move(p));
  }
  Scalar radius(mpq_class(1, 8 * static_cast<long>(r * r * (d + 1))));
  for (int attempt = 0; attempt < 24; ++attempt, radius /= Scalar(2)) {
    std::vector<Point> pts;
    for (std::size_t site = 0; site <= d; ++site) {
      Point center(std::vector<Scalar>(d, Scalar(0)));
      if (site > 0) center[site - 1] = Scalar(1);
      for (const auto& off : offsets) pts.push_back(center + radius * off);
    }
    Configuration cfg(d, std::move(pts));
    if (!tverberg_partition(cfg, r, options).certificate) return cfg;
  }
  throw GeometryError(ErrorCode::kBudgetExceeded, "cluster radius search failed");
}

}  // namespace linkgeom
