#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ipath/contraction.hpp"
#include "ipath/graph.hpp"

namespace ipath {

using Node = std::int32_t;
using NodeEdge = std::pair<Node, Node>;
using NodeSet = std::vector<Node>;   // sorted
using NodePath = std::vector<Node>;  // ordered host path

enum class HostKind { kTree, kPath, kCycle };

std::string_view to_string(HostKind kind);
HostKind host_kind_from_string(std::string_view s);

struct RepresentationStats {
  int width = -1;     // max bag size - 1
  int adhesion = 0;   // max adhesion-set size over host edges
  bool varied = false;

  bool operator==(const RepresentationStats&) const = default;
};

/// A host tree, path or cycle together with one connected model per graph
/// vertex such that adjacent vertices have intersecting models.
///
/// Path hosts list their nodes in path order (edges {i, i+1}); cycle hosts
/// additionally close with {m-1, 0}. Bags and models are both stored sorted
/// and kept consistent. Values are immutable once built.
///
/// Cycle representations describe a C-vortex: they may leave vertices
/// without a model (those outside the vortex) and can carry one anchor
/// vertex per cycle node, whose model must contain that node.
class Representation {
 public:
  Representation() = default;

  // Checks host shape and model connectivity, not edge coverage.
  static Representation from_models(HostKind kind, Node nodes, std::span<const NodeEdge> host_edges,
                                    std::vector<NodeSet> models,
                                    std::vector<Vertex> anchors = {});
  static Representation from_bags(HostKind kind, Node nodes, std::span<const NodeEdge> host_edges,
                                  std::span<const VertexSet> bags, Vertex graph_order,
                                  std::vector<Vertex> anchors = {});

  // Throws ValidationError naming the witness when g is not represented:
  // a vertex without model, or an edge whose models do not intersect.
  void validate(const Graph& g) const;

  HostKind kind() const { return kind_; }
  Node host_order() const { return static_cast<Node>(host_adj_.size()); }
  Vertex graph_order() const { return static_cast<Vertex>(models_.size()); }
  std::span<const Node> host_neighbors(Node t) const { return host_adj_[t]; }
  std::vector<NodeEdge> host_edges() const;
  bool host_adjacent(Node a, Node b) const;

  std::span<const Vertex> bag(Node t) const { return bags_[t]; }
  const std::vector<VertexSet>& bags() const { return bags_; }
  std::span<const Node> model(Vertex v) const { return models_[v]; }
  const std::vector<NodeSet>& models() const { return models_; }
  std::span<const Vertex> anchors() const { return anchors_; }

  int width() const;
  int adhesion() const;
  bool varied() const;
  RepresentationStats stats() const { return {width(), adhesion(), varied()}; }

  bool operator==(const Representation&) const = default;

 private:
  void rebuild_bags(Vertex graph_order);

  HostKind kind_ = HostKind::kTree;
  std::vector<std::vector<Node>> host_adj_;
  std::vector<NodeSet> models_;
  std::vector<VertexSet> bags_;
  std::vector<Vertex> anchors_;
};

inline std::span<const Vertex> bag(const Representation& rep, Node t) { return rep.bag(t); }

// Tree (or path) representation built from bags and validated against g.
Representation from_bags(HostKind kind, Node nodes, std::span<const NodeEdge> host_edges,
                         std::span<const VertexSet> bags, const Graph& g);

VertexSet adhesion_set(const Representation& rep, Node t, Node u);

// G[bag(t)] plus a clique on each adhesion set of t; local vertex i is
// parent vertex bag(t)[i].
Subgraph torso(const Representation& rep, const Graph& g, Node t);

struct VariedResult {
  Representation rep;
  std::vector<Node> node_map;  // old host node -> new host node
};

// Contracts host edges tt' with bag(t) a subset of bag(t') until none remain.
VariedResult make_varied(const Representation& rep, const Graph& g);

// Number of vertices whose model meets the host path p.
std::size_t path_weight(const Representation& rep, std::span<const Node> p);

// Maximum path weight from x to a leaf, minus |bag(x)|.
std::size_t node_weight(const Representation& rep, Node x);

struct WeightedPath {
  NodePath path;
  std::size_t weight = 0;
};

inline constexpr Node kMaxWeightPathHostCap = 10'000;

// Exhaustive search over leaf pairs; ties go to the lexicographically least
// (leaf, leaf) pair. Hosts larger than kMaxWeightPathHostCap are refused.
WeightedPath max_weight_path(const Representation& rep);

// Host path through the tree with the most nodes (double BFS).
NodePath longest_host_path(const Representation& rep);

// Path representation on the host path p with every model clipped to p.
// Requires every model to meet p.
Representation restrict_to_path(const Representation& rep, const Graph& g,
                                std::span<const Node> p);

// Representation of a subgraph: to_parent[i] is the parent vertex of new
// vertex i. Path hosts are trimmed to the span of the kept models.
Representation restrict_to_vertices(const Representation& rep, std::span<const Vertex> to_parent);

// Representation of m.quotient(original, true): each super-vertex gets the
// union of its members' models.
Representation contract_models(const Representation& rep, const ContractionMap& m);

}  // namespace ipath
