#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linkgeom/realizability.hpp"

namespace linkgeom {

/// Grid points A_jp (j < m, p < n, stored row-major) with the triangles
/// A_jp A_kq A_jq and A_jp A_kq A_kp for j < k, p < q.
class ProductGrid {
 public:
  ProductGrid(std::size_t m, std::size_t n, Configuration cfg);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const Configuration& configuration() const { return cfg_; }
  std::size_t index(std::size_t j, std::size_t p) const { return j * n_ + p; }
  const Point& at(std::size_t j, std::size_t p) const { return cfg_[index(j, p)]; }
  const std::vector<SimplexRef>& triangles() const { return triangles_; }

 private:
  std::size_t m_;
  std::size_t n_;
  Configuration cfg_;
  std::vector<SimplexRef> triangles_;
};

/// "A{j}{p}"; callers pass 1-based indices; "A{j}_{p}" once an index reaches 10.
std::string grid_label(std::size_t j, std::size_t p);

/// Triangle list of the (m,n)-product on row-major vertex indices.
std::vector<SimplexRef> product_triangles(std::size_t m, std::size_t n);

/// Throws SHAPE_MISMATCH unless the table is m rows of n points.
ProductGrid product_grid(std::size_t m, std::size_t n, const std::vector<std::vector<Point>>& table);
Hypergraph2 product_hypergraph(std::size_t m, std::size_t n);

/// Points (t, t^2, ..., t^d) for strictly increasing params.
Configuration moment_curve(std::size_t count, std::size_t d, const std::vector<Scalar>& params);
/// Params t = 1..count.
Configuration moment_curve(std::size_t count, std::size_t d);

/// Rational hexagon (2,0),(1,2),(-1,2),(-2,0),(-1,-2),(1,-2) lifted to
/// heights 1..6.
Configuration hexagon_helix6();

/// Points ((1-t^2)/(1+t^2), 2t/(1+t^2), t). Parameter tuples are tried in a
/// fixed order until the points are in general position and every segment
/// meets the surface of the complementary tetrahedron an even number of
/// times. Throws SEARCH_EXHAUSTED.
Configuration rational_helix(std::size_t n);

/// Origin, standard basis and barycenter of the standard d-simplex.
Configuration simplex_plus_interior(std::size_t d);

/// Apex (in R^d) followed by the base points lifted to x_d = 0. Throws
/// APEX_IN_HYPERPLANE when the apex has x_d = 0.
Configuration cone(const Point& apex, const Configuration& base);

/// (2,n)-grid in R^3: A_1p on the moment curve and A_2p = A_1p + V, with V
/// halved until the triangle list is embedded.
ProductGrid cylinder_grid(std::size_t n, int shrink_budget = 40);

/// (3,n)-grid in R^3 from the seeds (1,0,1), (-1,0,1), (0,0,2), (0,0,3) and
/// their images under the rotation by 2pi/3 about the x-axis. n in 2..4.
ProductGrid torus_k3n(std::size_t n);

/// (4,n)-grid in R^4: the cylinder rows in x_4 = 0 plus the translates of
/// the first row by searched vectors v3, v4 leaving that hyperplane.
ProductGrid k4n_grid_r4(std::size_t n, std::size_t search_budget = 200);

}  // namespace linkgeom
