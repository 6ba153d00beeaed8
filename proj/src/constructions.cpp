#include "linkgeom/constructions.hpp"

#include <set>

#include "linkgeom/errors.hpp"

namespace linkgeom {

std::string grid_label(std::size_t j, std::size_t p) {
  const std::string js = std::to_string(j);
  const std::string ps = std::to_string(p);
  if (j >= 10 || p >= 10) return "A" + js + "_" + ps;
  return "A" + js + ps;
}

std::vector<SimplexRef> product_triangles(std::size_t m, std::size_t n) {
  std::vector<SimplexRef> out;
  auto at = [n](std::size_t j, std::size_t p) { return j * n + p; };
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          out.push_back(SimplexRef{at(j, p), at(k, q), at(j, q)});
          out.push_back(SimplexRef{at(j, p), at(k, q), at(k, p)});
        }
      }
    }
  }
  return out;
}

ProductGrid::ProductGrid(std::size_t m, std::size_t n, Configuration cfg)
    : m_(m), n_(n), cfg_(std::move(cfg)), triangles_(product_triangles(m, n)) {
  if (cfg_.size() != m * n) throw GeometryError(ErrorCode::kShapeMismatch, "grid has the wrong number of points");
}

ProductGrid product_grid(std::size_t m, std::size_t n, const std::vector<std::vector<Point>>& table) {
  if (m == 0 || n == 0 || table.size() != m) throw GeometryError(ErrorCode::kShapeMismatch, "table rows differ from m");
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < m; ++j) {
    if (table[j].size() != n) throw GeometryError(ErrorCode::kShapeMismatch, "table row length differs from n");
    for (std::size_t p = 0; p < n; ++p) {
      pts.push_back(table[j][p]);
      labels.push_back(grid_label(j + 1, p + 1));
    }
  }
  const std::size_t d = pts.front().dimension();
  return ProductGrid(m, n, Configuration(d, std::move(pts), std::move(labels)));
}

Hypergraph2 product_hypergraph(std::size_t m, std::size_t n) { return Hypergraph2(m * n, product_triangles(m, n)); }

Configuration moment_curve(std::size_t count, std::size_t d, const std::vector<Scalar>& params) {
  if (params.size() != count) throw GeometryError(ErrorCode::kInvalidArgument, "need one parameter per point");
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (!(params[i - 1] < params[i])) throw GeometryError(ErrorCode::kInvalidArgument, "parameters must increase");
  }
  std::vector<Point> pts;
  for (const auto& t : params) {
    Point p(std::vector<Scalar>(d, Scalar(0)));
    Scalar power = t;
    for (std::size_t c = 0; c < d; ++c) {
      p[c] = power;
      power *= t;
    }
    pts.push_back(std::move(p));
  }
  return Configuration(d, std::move(pts));
}

Configuration moment_curve(std::size_t count, std::size_t d) {
  std::vector<Scalar> params;
  for (std::size_t i = 1; i <= count; ++i) params.emplace_back(static_cast<long>(i));
  return moment_curve(count, d, params);
}

Configuration hexagon_helix6() {
  const long xy[6][2] = {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}};
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (long i = 0; i < 6; ++i) {
    pts.push_back(Point{Scalar(xy[i][0]), Scalar(xy[i][1]), Scalar(i + 1)});
    labels.push_back("A" + std::to_string(i + 1));
  }
  return Configuration(3, std::move(pts), std::move(labels));
}

namespace {

Point helix_point(const Scalar& t) {
  const Scalar one(1);
  const Scalar den = one + t * t;
  return Point{(one - t * t) / den, Scalar(2) * t / den, t};
}

bool helix_segments_even(const Configuration& cfg) {
  const std::size_t n = cfg.size();
  bool ok = true;
  for_each_subset(n, 2, [&](const IndexSet& seg) {
    IndexSet rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != seg[0] && i != seg[1]) rest.push_back(i);
    }
    for_each_subset(rest.size(), 4, [&](const IndexSet& pick) {
      const SimplexRef tet{rest[pick[0]], rest[pick[1]], rest[pick[2]], rest[pick[3]]};
      try {
        if (line_body_crossings(cfg, BrokenLine(seg, false), tetrahedron_surface(tet)) % 2 != 0) ok = false;
      } catch (const GeometryError&) {
        ok = false;
      }
      return ok;
    });
    return ok;
  });
  return ok;
}

}  // namespace

Configuration rational_helix(std::size_t n) {
  if (n < 1) throw GeometryError(ErrorCode::kInvalidArgument, "need at least one point");
  // Parameter tuples t_i = (i + shift) / scale.
  for (long scale = 1; scale <= 8; ++scale) {
    for (long shift = 0; shift <= 8; ++shift) {
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(helix_point(Scalar(static_cast<long>(i) - shift, 1) / Scalar(scale)));
      }
      Configuration cfg(3, std::move(pts));
      if (is_general_position(cfg).ok && helix_segments_even(cfg)) return cfg;
    }
  }
  throw GeometryError(ErrorCode::kSearchExhausted, "no helix parameters passed the even-crossing check");
}

Configuration simplex_plus_interior(std::size_t d) {
  if (d < 1) throw GeometryError(ErrorCode::kInvalidArgument, "need d >= 1");
  std::vector<Point> pts;
  pts.emplace_back(std::vector<Scalar>(d, Scalar(0)));
  for (std::size_t i = 0; i < d; ++i) {
    Point e(std::vector<Scalar>(d, Scalar(0)));
    e[i] = Scalar(1);
    pts.push_back(std::move(e));
  }
  pts.emplace_back(std::vector<Scalar>(d, Scalar(1, static_cast<long>(d + 1))));
  return Configuration(d, std::move(pts));
}

Configuration cone(const Point& apex, const Configuration& base) {
  const std::size_t d = apex.dimension();
  if (d < 2 || base.dimension() != d - 1) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "base must live in R^(d-1)");
  }
  if (apex[d - 1].is_zero()) throw GeometryError(ErrorCode::kApexInHyperplane, "apex lies in the base hyperplane");
  std::vector<Point> pts{apex};
  std::vector<std::string> labels{"O"};
  for (std::size_t i = 0; i < base.size(); ++i) {
    Point p = base[i];
    p.coords.emplace_back(0);
    pts.push_back(std::move(p));
    labels.push_back(base.label(i));
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) labels.clear();
  return Configuration(d, std::move(pts), std::move(labels));
}

namespace {

std::vector<std::vector<Point>> translate_rows(const std::vector<Point>& row, const std::vector<Point>& shifts) {
  std::vector<std::vector<Point>> table;
  for (const auto& v : shifts) {
    std::vector<Point> r;
    for (const auto& a : row) r.push_back(a + v);
    table.push_back(std::move(r));
  }
  return table;
}

Point zero_point(std::size_t d) { return Point(std::vector<Scalar>(d, Scalar(0))); }

}  // namespace

ProductGrid cylinder_grid(std::size_t n, int shrink_budget) {
  if (n < 2) throw GeometryError(ErrorCode::kInvalidArgument, "need n >= 2");
  const Configuration row_cfg = moment_curve(n, 3);
  const std::vector<Point>& row = row_cfg.points();
  Point v{Scalar(1), Scalar(-2), Scalar(3)};
  for (int attempt = 0; attempt < shrink_budget; ++attempt, v = Scalar(1, 2) * v) {
    std::vector<Point> frame{zero_point(3), v};
    frame.insert(frame.end(), row.begin(), row.end());
    if (!is_general_position(Configuration(3, frame)).ok) continue;
    ProductGrid grid = product_grid(2, n, translate_rows(row, {zero_point(3), v}));
    if (is_embedded(grid.configuration(), grid.triangles()).embedded) return grid;
  }
  throw GeometryError(ErrorCode::kSearchExhausted, "no translate vector made the cylinder embedded");
}

ProductGrid torus_k3n(std::size_t n) {
  if (n < 2 || n > 4) throw GeometryError(ErrorCode::kInvalidArgument, "torus grid needs 2 <= n <= 4");
  const Scalar c(-1, 2);
  const Scalar s = Scalar(1, 2) * Scalar::sqrt3();
  auto rotate = [&](const Point& p) { return Point{p[0].as_quad(), c * p[1] - s * p[2], s * p[1] + c * p[2]}; };
  const long seeds[4][3] = {{1, 0, 1}, {-1, 0, 1}, {0, 0, 2}, {0, 0, 3}};
  std::vector<std::vector<Point>> table(3);
  for (std::size_t p = 0; p < n; ++p) {
    Point a{Scalar(seeds[p][0]).as_quad(), Scalar(seeds[p][1]).as_quad(), Scalar(seeds[p][2]).as_quad()};
    table[0].push_back(a);
    table[1].push_back(rotate(a));
    table[2].push_back(rotate(rotate(a)));
  }
  ProductGrid grid = product_grid(3, n, table);
  const auto check = is_embedded(grid.configuration(), grid.triangles());
  if (!check.embedded) throw GeometryError(ErrorCode::kSearchExhausted, "torus grid is not embedded");
  return grid;
}

ProductGrid k4n_grid_r4(std::size_t n, std::size_t search_budget) {
  const ProductGrid base = cylinder_grid(n);
  auto lift = [](const Point& p) {
    Point q = p;
    q.coords.emplace_back(0);
    return q;
  };
  std::vector<Point> row;
  for (std::size_t p = 0; p < n; ++p) row.push_back(lift(base.at(0, p)));
  const Point v = lift(base.at(1, 0) - base.at(0, 0));

  // Candidates: v3 = (a, b, c, 1), v4 = the centroid of 0, V, v3 or a second
  // lattice vector at height -1.
  std::vector<Point> lattice;
  const long steps[] = {0, 1, -1, 2, -2};
  for (long a : steps) {
    for (long b : steps) {
      for (long c : steps) lattice.push_back(Point{Scalar(a), Scalar(b), Scalar(c), Scalar(1)});
    }
  }
  std::size_t tried = 0;
  auto attempt = [&](const Point& v3, const Point& v4) -> std::optional<ProductGrid> {
    ++tried;
    std::vector<Point> shifts{zero_point(4), v, v3, v4};
    ProductGrid grid = product_grid(4, n, translate_rows(row, shifts));
    if (is_embedded(grid.configuration(), grid.triangles()).embedded) return grid;
    return std::nullopt;
  };
  for (const auto& v3 : lattice) {
    if (tried >= search_budget) break;
    const Point centroid = Scalar(1, 3) * (v + v3);
    if (auto g = attempt(v3, centroid)) return *g;
  }
  for (const auto& v3 : lattice) {
    for (const auto& w : lattice) {
      if (tried >= search_budget) break;
      Point v4 = w;
      v4[3] = Scalar(-1);
      if (auto g = attempt(v3, v4)) return *g;
    }
  }
  throw GeometryError(ErrorCode::kSearchExhausted,
                      "no translate pair certified after " + std::to_string(tried) + " candidates");
}

}  // namespace linkgeom
