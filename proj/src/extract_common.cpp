#include "extract_common.hpp"

#include "ipath/errors.hpp"

namespace ipath::detail {

Absorbed absorb_runs(const Graph& g, std::span<const Vertex> ham, const std::vector<char>& keep) {
  ContractionMap m(g.order());
  Vertex last_kept = -1;
  std::vector<Vertex> leading;
  for (Vertex v : ham) {
    if (keep[v]) {
      if (last_kept < 0) {
        // Absorb the leading run into the first kept vertex, nearest first.
        for (auto it = leading.rbegin(); it != leading.rend(); ++it) m.contract(v, *it);
      }
      last_kept = v;
    } else if (last_kept < 0) {
      leading.push_back(v);
    } else {
      m.contract(last_kept, v);
    }
  }
  if (last_kept < 0) throw InternalError("no vertex to absorb into");

  Absorbed out{m.quotient(g, true), {}, {}};
  const auto compact = m.id_to_compact();
  for (Vertex v : ham)
    if (keep[v]) out.ham.push_back(compact[v]);
  out.map = std::move(m);
  return out;
}

ExtractionCertificate make_certificate(const Graph& g, VertexPath path, std::string kind,
                                       BoundParams params) {
  ExtractionCertificate cert;
  cert.path = std::move(path);
  cert.bound_kind = std::move(kind);
  cert.params = std::move(params);
  certify(g, cert);
  return cert;
}

VertexPath ham_edge(std::span<const Vertex> ham) {
  if (ham.empty()) return {};
  if (ham.size() == 1) return {ham[0]};
  return {ham[0], ham[1]};
}

}  // namespace ipath::detail
