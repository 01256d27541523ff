#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "ipath/certificate.hpp"
#include "ipath/extractors.hpp"
#include "ipath/generators.hpp"
#include "ipath/graph.hpp"
#include "ipath/representation.hpp"

namespace ipath {

using Json = nlohmann::json;

// All parsers throw InputError on malformed input.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Bags form {"kind", "host": {"nodes", "edges"}, "bags", ["anchors"]}.
// A "models" array is accepted in place of "bags".
Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j, Vertex graph_order);

struct Instance {
  GeneratedInstance data;
  std::map<Node, TorsoKind> torso_kinds;  // optional annotation for the master extractor
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json certificate_to_json(const ExtractionCertificate& cert);
ExtractionCertificate certificate_from_json(const Json& j);

// Compact dump; object keys are sorted, so equal values give equal bytes.
std::string canonical_dump(const Json& j);

std::string sha256_hex(std::string_view data);
// Hash of the canonical graph JSON, stored in certificates.
std::string graph_sha256(const Graph& g);

std::string to_dot(const Graph& g);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ipath
