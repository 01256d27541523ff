#include "ipath/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

template <typename T>
T get_as(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<std::vector<std::int64_t>> int_lists(const Json& j, const char* key) {
  return get_as<std::vector<std::vector<std::int64_t>>>(j, key);
}

template <typename Id>
std::pair<Id, Id> as_pair(const std::vector<std::int64_t>& e, const char* what) {
  if (e.size() != 2) throw InputError(std::string(what) + " entries must have two ids");
  for (auto x : e)
    if (x < 0 || x > INT32_MAX) throw InputError(std::string(what) + " id out of range");
  return {static_cast<Id>(e[0]), static_cast<Id>(e[1])};
}

Json rational_to_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const BigInt& num = boost::multiprecision::numerator(r);
    if (num >= INT64_MIN && num <= INT64_MAX) return num.convert_to<std::int64_t>();
  }
  return to_string(r);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("parameter values must be integers or \"p/q\" strings");
}

std::string_view torso_kind_name(TorsoKind::Kind k) {
  return k == TorsoKind::Kind::kAlmostEmbeddable ? "almost-embeddable" : "almost-bounded-degree";
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const auto n = get_as<std::int64_t>(j, "n");
  if (n < 0 || n > INT32_MAX) throw InputError("vertex count out of range");
  std::vector<Edge> edges;
  for (const auto& e : int_lists(j, "edges")) edges.push_back(as_pair<Vertex>(e, "edge"));
  return Graph(static_cast<Vertex>(n), edges);
}

Json representation_to_json(const Representation& rep) {
  Json host_edges = Json::array();
  for (auto [a, b] : rep.host_edges()) host_edges.push_back({a, b});
  Json j = {{"kind", std::string(to_string(rep.kind()))},
            {"host", {{"nodes", rep.host_order()}, {"edges", std::move(host_edges)}}},
            {"bags", rep.bags()}};
  if (!rep.anchors().empty()) {
    j["anchors"] = std::vector<Vertex>(rep.anchors().begin(), rep.anchors().end());
  }
  return j;
}

Representation representation_from_json(const Json& j, Vertex graph_order) {
  const auto kind = host_kind_from_string(get_as<std::string>(j, "kind"));
  const Json host = j.contains("host") ? j.at("host") : Json();
  const auto nodes = get_as<std::int64_t>(host, "nodes");
  if (nodes < 1 || nodes > INT32_MAX) throw InputError("host node count out of range");
  std::vector<NodeEdge> edges;
  for (const auto& e : int_lists(host, "edges")) edges.push_back(as_pair<Node>(e, "host edge"));
  std::vector<Vertex> anchors;
  if (j.contains("anchors")) anchors = get_as<std::vector<Vertex>>(j, "anchors");
  if (j.contains("bags")) {
    const auto bags = get_as<std::vector<VertexSet>>(j, "bags");
    for (const auto& b : bags)
      for (Vertex v : b)
        if (v < 0 || v >= graph_order) throw InputError("bag vertex " + std::to_string(v) + " out of range");
    for (const auto& b : bags)
      if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
        throw InputError("bags must be sorted and duplicate-free");
    return Representation::from_bags(kind, static_cast<Node>(nodes), edges, bags, graph_order,
                                     std::move(anchors));
  }
  auto models = get_as<std::vector<NodeSet>>(j, "models");
  if (models.size() != static_cast<std::size_t>(graph_order)) {
    throw InputError("expected one model per vertex");
  }
  return Representation::from_models(kind, static_cast<Node>(nodes), edges, std::move(models),
                                     std::move(anchors));
}

Json instance_to_json(const Instance& inst) {
  const auto& d = inst.data;
  Json j = {{"graph", graph_to_json(d.graph)},
            {"ham", d.ham},
            {"rep", d.rep ? representation_to_json(*d.rep) : Json(nullptr)},
            {"family", d.family},
            {"meta", d.meta}};
  if (!inst.torso_kinds.empty()) {
    Json kinds = Json::array();
    for (const auto& [t, tk] : inst.torso_kinds) {
      kinds.push_back({{"node", t},
                       {"kind", std::string(torso_kind_name(tk.kind))},
                       {"k", tk.k},
                       {"delta", tk.delta}});
    }
    j["torso_kinds"] = std::move(kinds);
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  Instance inst;
  auto& d = inst.data;
  d.graph = graph_from_json(j.contains("graph") ? j.at("graph") : Json());
  d.ham = get_as<VertexPath>(j, "ham");
  if (j.contains("rep") && !j.at("rep").is_null()) {
    d.rep = representation_from_json(j.at("rep"), d.graph.order());
  }
  if (j.contains("family")) d.family = get_as<std::string>(j, "family");
  if (j.contains("meta")) d.meta = get_as<std::map<std::string, std::int64_t>>(j, "meta");
  if (j.contains("torso_kinds")) {
    for (const auto& e : j.at("torso_kinds")) {
      TorsoKind tk;
      const auto name = get_as<std::string>(e, "kind");
      if (name == "almost-embeddable") {
        tk.kind = TorsoKind::Kind::kAlmostEmbeddable;
      } else if (name != "almost-bounded-degree") {
        throw InputError("unknown torso kind '" + name + "'");
      }
      if (e.contains("k")) tk.k = get_as<int>(e, "k");
      if (e.contains("delta")) tk.delta = get_as<int>(e, "delta");
      inst.torso_kinds[get_as<Node>(e, "node")] = tk;
    }
  }
  return inst;
}

Json certificate_to_json(const ExtractionCertificate& cert) {
  Json params = Json::object();
  for (const auto& [k, v] : cert.params) params[k] = rational_to_json(v);
  return {{"bound_kind", cert.bound_kind},
          {"params", std::move(params)},
          {"path", cert.path},
          {"order", cert.order()},
          {"verified", cert.verified},
          {"input_sha256", cert.input_sha256}};
}

ExtractionCertificate certificate_from_json(const Json& j) {
  ExtractionCertificate cert;
  cert.bound_kind = get_as<std::string>(j, "bound_kind");
  cert.path = get_as<VertexPath>(j, "path");
  if (j.contains("verified")) cert.verified = get_as<bool>(j, "verified");
  if (j.contains("input_sha256")) cert.input_sha256 = get_as<std::string>(j, "input_sha256");
  if (!j.contains("params") || !j.at("params").is_object()) throw InputError("missing field 'params'");
  for (const auto& [k, v] : j.at("params").items()) cert.params[k] = rational_from_json(v);
  if (j.contains("order") && get_as<std::size_t>(j, "order") != cert.path.size()) {
    throw InputError("certificate order does not match its path");
  }
  return cert;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string graph_sha256(const Graph& g) { return sha256_hex(canonical_dump(graph_to_json(g))); }

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace ipath
