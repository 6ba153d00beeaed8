#pragma once

#include <string>

#include <json.hpp>

#include "linkgeom/partitions.hpp"
#include "linkgeom/verifiers.hpp"

namespace linkgeom {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"dimension", "field", "points": [{"label", "coords"}]}. Reading throws
/// MALFORMED_INPUT on any format violation, including unreduced fractions.
Json configuration_to_json(const Configuration& cfg);
Configuration configuration_from_json(const Json& j);

/// Point file plus {"shape": [m, n], "labels": "A{j}{p}"}.
Json grid_to_json(const ProductGrid& grid);
ProductGrid grid_from_json(const Json& j);

/// {"vertices", "faces", "edges"} with 0-based indices.
Json hypergraph_to_json(const Hypergraph2& hg);
Hypergraph2 hypergraph_from_json(const Json& j);

Json report_to_json(const ParityReport& r);
Json certificate_to_json(const PartitionCertificate& cert);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace linkgeom
