#include "linkgeom/linalg.hpp"

#include "linkgeom/errors.hpp"

namespace linkgeom {
namespace {

void lcm_into(mpz_class& acc, const mpz_class& den) {
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
}

// Bareiss forward elimination on the first `pivot_cols` columns. Returns the
// number of row swaps, or -1 when some column has no nonzero pivot.
int bareiss_forward(Matrix& m, std::size_t pivot_cols) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Scalar prev(1);
  int swaps = 0;
  for (std::size_t k = 0; k < pivot_cols && k < rows; ++k) {
    std::size_t p = k;
    while (p < rows && m[p][k].is_zero()) ++p;
    if (p == rows) return -1;
    if (p != k) {
      std::swap(m[p], m[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = Scalar(0);
    }
    prev = m[k][k];
  }
  return swaps;
}

}  // namespace

Matrix clear_row_denominators(Matrix m) {
  for (auto& row : m) {
    mpz_class l = 1;
    bool quad = false;
    for (const auto& x : row) {
      lcm_into(l, x.rational_part().get_den());
      lcm_into(l, x.sqrt3_part().get_den());
      quad = quad || !x.is_rational();
    }
    if (l == 1) continue;
    const Scalar factor = quad ? Scalar::quad(mpq_class(l), 0) : Scalar(mpq_class(l));
    for (auto& x : row) x *= factor;
  }
  return m;
}

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Scalar(1);
  for (const auto& row : m) {
    if (row.size() != n) throw GeometryError(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  }
  // Undo the positive row scaling afterwards so the value is exact.
  Scalar scale(1);
  Matrix cleared = clear_row_denominators(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j].is_zero()) {
        scale *= cleared[i][j] / m[i][j];
        break;
      }
    }
  }
  const int swaps = bareiss_forward(cleared, n);
  if (swaps < 0) return Scalar(0);
  Scalar det = cleared[n - 1][n - 1];
  if (swaps % 2) det = -det;
  return det / scale;
}

int determinant_sign(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Matrix cleared = clear_row_denominators(std::move(m));
  const int swaps = bareiss_forward(cleared, n);
  if (swaps < 0) return 0;
  const int s = cleared[n - 1][n - 1].sign();
  return swaps % 2 ? -s : s;
}

LinearSolution solve(const Matrix& a, const Vector& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw GeometryError(ErrorCode::kDimensionMismatch, "rhs length");
  Matrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw GeometryError(ErrorCode::kDimensionMismatch, "solve needs a square matrix");
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  aug = clear_row_denominators(std::move(aug));
  Matrix work = aug;
  LinearSolution out;
  if (bareiss_forward(work, n) >= 0) {
    out.kind = LinearSolution::Kind::kUnique;
    out.x.assign(n, Scalar(0));
    for (std::size_t i = n; i-- > 0;) {
      Scalar acc = work[i][n];
      for (std::size_t j = i + 1; j < n; ++j) acc -= work[i][j] * out.x[j];
      out.x[i] = acc / work[i][i];
    }
    return out;
  }
  // Singular: consistent iff rank(A) == rank([A|b]).
  std::vector<std::size_t> pivots;
  rref(aug, &pivots);
  const bool inconsistent = !pivots.empty() && pivots.back() == n;
  out.kind = inconsistent ? LinearSolution::Kind::kNone : LinearSolution::Kind::kInfinite;
  return out;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = Scalar(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

Vector kernel_vector(const Matrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == cols) return {};
  Vector x(cols, Scalar(0));
  x[free_col] = Scalar(1);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][free_col];
  return x;
}

}  // namespace linkgeom
