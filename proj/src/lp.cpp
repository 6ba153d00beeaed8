#include "linkgeom/lp.hpp"

#include <optional>

#include "linkgeom/errors.hpp"

namespace linkgeom {
namespace {

class Tableau {
 public:
  // Rows: constraints with rhs in the last column; basis[i] is the basic
  // variable of row i; reduced[j] = c_j - c_B B^-1 a_j.
  Matrix rows;
  std::vector<std::size_t> basis;
  Vector reduced;
  Scalar value;

  std::size_t width() const { return reduced.size(); }

  void pivot(std::size_t r, std::size_t s) {
    const std::size_t w = rows[r].size();
    const Scalar inv = Scalar(1) / rows[r][s];
    for (std::size_t j = 0; j < w; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][s].is_zero()) continue;
      const Scalar f = rows[i][s];
      for (std::size_t j = 0; j < w; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    if (!reduced[s].is_zero()) {
      const Scalar f = reduced[s];
      for (std::size_t j = 0; j < width(); ++j) {
        if (!rows[r][j].is_zero()) reduced[j] -= f * rows[r][j];
      }
      value += f * rows[r][w - 1];
    }
    basis[r] = s;
  }

  void set_costs(const Vector& costs) {
    reduced = costs;
    value = Scalar(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Scalar& cb = costs[basis[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < width(); ++j) reduced[j] -= cb * rows[i][j];
      value += cb * rows[i].back();
    }
  }

  // Bland's rule. Returns false when unbounded.
  bool optimize(std::size_t allowed_columns) {
    for (;;) {
      std::size_t s = allowed_columns;
      for (std::size_t j = 0; j < allowed_columns; ++j) {
        if (reduced[j].sign() > 0) {
          s = j;
          break;
        }
      }
      if (s == allowed_columns) return true;
      std::optional<std::size_t> r;
      Scalar best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][s].sign() <= 0) continue;
        Scalar ratio = rows[i].back() / rows[i][s];
        if (!r || ratio < best || (ratio == best && basis[i] < basis[*r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (!r) return false;
      pivot(*r, s);
    }
  }

  Vector solution(std::size_t n) const {
    Vector x(n, Scalar(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (basis[i] < n) x[basis[i]] = rows[i].back();
    }
    return x;
  }
};

// Phase one. On success the tableau holds a feasible basis over the n
// original columns only (artificial columns removed, redundant rows dropped).
std::optional<Tableau> phase_one(const Matrix& a, const Vector& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  if (b.size() != m) throw GeometryError(ErrorCode::kDimensionMismatch, "lp rhs length");
  Tableau t;
  t.rows.assign(m, Vector(n + m + 1, Scalar(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw GeometryError(ErrorCode::kDimensionMismatch, "lp row length");
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? -a[i][j] : a[i][j];
    t.rows[i][n + i] = Scalar(1);
    t.rows[i].back() = flip ? -b[i] : b[i];
    t.basis[i] = n + i;
  }
  Vector costs(n + m, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) costs[n + i] = Scalar(-1);
  t.set_costs(costs);
  t.optimize(n + m);
  if (t.value.sign() < 0) return std::nullopt;

  // Drive zero-level artificials out of the basis.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n && t.rows[i][j].is_zero()) ++j;
    if (j < n) {
      t.pivot(i, j);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  for (auto& row : t.rows) {
    Scalar rhs = row.back();
    row.resize(n);
    row.push_back(std::move(rhs));
  }
  t.reduced.resize(n);
  return t;
}

}  // namespace

LpResult maximize(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t n = a.empty() ? c.size() : a[0].size();
  if (c.size() != n) throw GeometryError(ErrorCode::kDimensionMismatch, "lp cost length");
  LpResult out;
  auto t = phase_one(a, b);
  if (!t) return out;
  t->set_costs(c);
  const bool bounded = t->optimize(n);
  out.status = bounded ? LpResult::Status::kOptimal : LpResult::Status::kUnbounded;
  out.x = t->solution(n);
  out.value = Scalar(0);
  for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  return out;
}

std::optional<Vector> find_feasible(const Matrix& a, const Vector& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  auto t = phase_one(a, b);
  if (!t) return std::nullopt;
  return t->solution(n);
}

}  // namespace linkgeom
