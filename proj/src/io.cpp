#include "linkgeom/io.hpp"

#include <fstream>

#include "linkgeom/errors.hpp"

namespace linkgeom {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw GeometryError(ErrorCode::kMalformedInput, what); }

bool is_count(const Json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0); }

mpq_class rational_from_json(const Json& j) {
  if (!j.is_string()) malformed("rational must be a \"p/q\" string");
  try {
    return parse_reduced_rational(j.get<std::string>());
  } catch (const GeometryError& e) {
    malformed(e.message());
  }
}

IndexSet indices_from_json(const Json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size) malformed("expected an index list of length " + std::to_string(size));
  IndexSet out;
  for (const auto& x : j) {
    if (!is_count(x)) malformed("indices must be nonnegative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return format_rational(s.rational_part());
  return Json{{"a", format_rational(s.rational_part())}, {"b", format_rational(s.sqrt3_part())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_object()) {
    if (j.size() != 2 || !j.contains("a") || !j.contains("b")) malformed("quad scalar needs exactly \"a\" and \"b\"");
    return Scalar::quad(rational_from_json(j["a"]), rational_from_json(j["b"]));
  }
  return Scalar(rational_from_json(j));
}

Json configuration_to_json(const Configuration& cfg) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    Json coords = Json::array();
    for (const auto& x : cfg[i].coords) coords.push_back(scalar_to_json(x));
    pts.push_back(Json{{"label", cfg.label(i)}, {"coords", coords}});
  }
  return Json{{"dimension", cfg.dimension()},
              {"field", cfg.field() == Scalar::Field::kRational ? "rational" : "quad_sqrt3"},
              {"points", pts}};
}

Configuration configuration_from_json(const Json& j) {
  if (!j.is_object()) malformed("point file must be a JSON object");
  if (!j.contains("dimension") || !is_count(j["dimension"])) malformed("missing \"dimension\"");
  if (!j.contains("field") || !j["field"].is_string()) malformed("missing \"field\"");
  if (!j.contains("points") || !j["points"].is_array()) malformed("missing \"points\"");
  const auto d = j["dimension"].get<std::size_t>();
  const auto field = j["field"].get<std::string>();
  if (field != "rational" && field != "quad_sqrt3") malformed("unknown field " + field);
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (const auto& p : j["points"]) {
    if (!p.is_object() || !p.contains("coords") || !p["coords"].is_array()) malformed("point needs \"coords\"");
    if (p["coords"].size() != d) malformed("point has the wrong number of coordinates");
    Point pt;
    for (const auto& x : p["coords"]) {
      if (field == "rational" && !x.is_string()) malformed("rational file holds a quad scalar");
      Scalar s = scalar_from_json(x);
      pt.coords.push_back(field == "quad_sqrt3" ? s.as_quad() : s);
    }
    pts.push_back(std::move(pt));
    if (p.contains("label")) {
      if (!p["label"].is_string()) malformed("label must be a string");
      labels.push_back(p["label"].get<std::string>());
    }
  }
  if (!labels.empty() && labels.size() != pts.size()) malformed("either every point or no point has a label");
  if (pts.empty()) malformed("point file has no points");
  try {
    return Configuration(d, std::move(pts), std::move(labels));
  } catch (const GeometryError& e) {
    malformed(e.message());
  }
}

Json grid_to_json(const ProductGrid& grid) {
  Json j = configuration_to_json(grid.configuration());
  j["shape"] = Json::array({grid.m(), grid.n()});
  j["labels"] = "A{j}{p}";
  return j;
}

ProductGrid grid_from_json(const Json& j) {
  if (!j.contains("shape") || !j["shape"].is_array() || j["shape"].size() != 2 || !is_count(j["shape"][0]) ||
      !is_count(j["shape"][1])) {
    malformed("grid needs \"shape\": [m, n]");
  }
  const auto m = j["shape"][0].get<std::size_t>();
  const auto n = j["shape"][1].get<std::size_t>();
  const Configuration cfg = configuration_from_json(j);
  if (cfg.size() != m * n) throw GeometryError(ErrorCode::kShapeMismatch, "point count differs from m*n");
  std::vector<std::vector<Point>> table(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t p = 0; p < n; ++p) table[r].push_back(cfg[r * n + p]);
  }
  return product_grid(m, n, table);
}

Json hypergraph_to_json(const Hypergraph2& hg) {
  Json faces = Json::array();
  for (const auto& f : hg.faces()) faces.push_back(f.vertices());
  Json edges = Json::array();
  for (const auto& e : hg.edges()) edges.push_back(e.vertices());
  return Json{{"vertices", hg.vertex_count()}, {"faces", faces}, {"edges", edges}};
}

Hypergraph2 hypergraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !is_count(j["vertices"])) {
    malformed("hypergraph needs \"vertices\"");
  }
  if (!j.contains("faces") || !j["faces"].is_array()) malformed("hypergraph needs \"faces\"");
  std::vector<SimplexRef> faces;
  std::vector<SimplexRef> edges;
  try {
    for (const auto& f : j["faces"]) faces.emplace_back(indices_from_json(f, 3));
    if (j.contains("edges")) {
      if (!j["edges"].is_array()) malformed("\"edges\" must be a list");
      for (const auto& e : j["edges"]) edges.emplace_back(indices_from_json(e, 2));
    }
    return Hypergraph2(j["vertices"].get<std::size_t>(), std::move(faces), std::move(edges));
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::kMalformedInput) throw;
    malformed(e.message());
  }
}

Json report_to_json(const ParityReport& r) {
  Json w = Json::array();
  for (const auto& wit : r.witnesses) w.push_back(wit);
  Json j{{"theorem", r.theorem_id},
         {"input", r.input_summary},
         {"count", r.count},
         {"claim", claim_name(r.claim)},
         {"verdict", verdict_name(r.verdict)},
         {"witnesses", w}};
  j["degeneracy"] = r.degeneracy ? Json(*r.degeneracy) : Json(nullptr);
  return j;
}

Json certificate_to_json(const PartitionCertificate& cert) {
  Json point = Json::array();
  for (const auto& x : cert.common_point.coords) point.push_back(scalar_to_json(x));
  Json coeffs = Json::array();
  for (const auto& block : cert.coefficients) {
    Json b = Json::array();
    for (const auto& x : block) b.push_back(scalar_to_json(x));
    coeffs.push_back(b);
  }
  return Json{{"blocks", cert.blocks}, {"common_point", point}, {"coefficients", coeffs}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    malformed(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw GeometryError(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace linkgeom
