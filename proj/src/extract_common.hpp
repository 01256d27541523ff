#pragma once

#include <string>
#include <vector>

#include "ipath/certificate.hpp"
#include "ipath/contraction.hpp"
#include "ipath/graph.hpp"
#include "ipath/representation.hpp"

namespace ipath::detail {

struct Absorbed {
  Graph graph;  // compacted quotient
  ContractionMap map;
  VertexPath ham;  // kept vertices in path order, compact ids
};

// Merges every maximal run of Hamiltonian-path vertices with keep[v] == 0
// into the kept vertex before it (after it for a leading run).
Absorbed absorb_runs(const Graph& g, std::span<const Vertex> ham, const std::vector<char>& keep);

ExtractionCertificate make_certificate(const Graph& g, VertexPath path, std::string kind,
                                       BoundParams params);

// First edge of ham, or its single vertex.
VertexPath ham_edge(std::span<const Vertex> ham);

}  // namespace ipath::detail
