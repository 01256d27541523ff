#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "ipath/certificate.hpp"
#include "ipath/contraction.hpp"
#include "ipath/graph.hpp"
#include "ipath/representation.hpp"

namespace ipath {

/// Extractor for a graph class in which every graph with a Hamiltonian path
/// has an induced path of order at least c (log2 n)^d.
struct BaseExtractor {
  std::string name;
  Rational c;
  Rational d;
  std::function<bool(const Graph&)> in_class;  // empty accepts every graph
  std::function<ExtractionCertificate(const Graph&, const VertexPath&)> extract;
};

// Checks class membership (ClassError), runs the extractor and re-verifies
// both inducedness and the declared c (log2 n)^d guarantee (InternalError).
ExtractionCertificate run_base(const BaseExtractor& base, const Graph& g, const VertexPath& ham);

// The path extractors below return certificates in the ids of g. k defaults
// to width + 1 of the supplied representation.
ExtractionCertificate extract_pathwidth(const Graph& g, const VertexPath& ham,
                                        const Representation& rep,
                                        std::optional<int> k = std::nullopt);

struct PathContraction {
  Graph graph;
  ContractionMap map;
  Representation rep;  // path representation on the host path p
  VertexPath ham;
};

// Contracts Hamiltonian edges until every model meets the host path p.
PathContraction contract_to_path_rep(const Graph& g, const VertexPath& ham,
                                     const Representation& rep, std::span<const Node> p);

ExtractionCertificate extract_treewidth(const Graph& g, const VertexPath& ham,
                                        const Representation& rep,
                                        std::optional<int> k = std::nullopt);

// ham may be empty: the degree bound does not depend on it.
ExtractionCertificate extract_bounded_degree(const Graph& g, std::span<const Vertex> ham);

// Certifies c L >= (log2 n)^(1-d), given max degree at most 2^(c (log2 n)^d).
ExtractionCertificate extract_subpolynomial_degree(const Graph& g, std::span<const Vertex> ham,
                                                   const Rational& c, const Rational& d);

ExtractionCertificate extract_with_modulator(const Graph& g, const VertexPath& ham,
                                             std::span<const Vertex> x, const BaseExtractor& base);

// a defaults to adhesion + 1 (at least 2).
ExtractionCertificate extract_adhesion_pathrep(const Graph& g, const VertexPath& ham,
                                               const Representation& rep,
                                               std::optional<int> a = std::nullopt);

// kAuto follows the bound: a Hamiltonian edge when the bound is at most 2,
// else the big-bag branch when some bag reaches n^(1/(log2 n)^eps), else the
// long-path branch. The other values force a branch; the bound must then be
// at most 2 or the branch's own conditions must hold for the certificate to
// verify. Since c <= 1/3 and d <= 1, the bound exceeds 2 only for
// astronomically large n, so forcing is how the two branches are exercised.
enum class CompositionBranch { kAuto, kBigBag, kLongPath };

ExtractionCertificate extract_tree_composition(const Graph& g, const VertexPath& ham,
                                               const Representation& rep,
                                               const BaseExtractor& base,
                                               std::optional<int> a = std::nullopt,
                                               CompositionBranch branch = CompositionBranch::kAuto);

// Smallest cycle order accepted by extract_from_vortex.
BigInt vortex_min_cycle(Vertex n, int k);

ExtractionCertificate extract_from_vortex(const Graph& g, const VertexPath& ham,
                                          const Representation& vortex,
                                          std::optional<int> k = std::nullopt);

// Graphs of maximum degree at most delta.
BaseExtractor bounded_degree_base(int delta);

// Graphs with a set X of at most k vertices such that G - X has maximum
// degree at most delta.
BaseExtractor almost_bounded_degree_base(int k, int delta);

// A set of at most k vertices whose removal leaves maximum degree at most
// delta, smallest found by bounded search; nullopt when none exists.
std::optional<VertexSet> find_degree_modulator(const Graph& g, int k, int delta);

struct TorsoKind {
  enum class Kind { kAlmostBoundedDegree, kAlmostEmbeddable };
  Kind kind = Kind::kAlmostBoundedDegree;
  int k = 0;
  int delta = 0;
};

ExtractionCertificate extract_master(const Graph& g, const VertexPath& ham,
                                     const Representation& rep,
                                     const std::map<Node, TorsoKind>& torso_kinds,
                                     const std::optional<BaseExtractor>& embeddable_plugin =
                                         std::nullopt);

}  // namespace ipath
