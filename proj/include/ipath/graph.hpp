#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ipath {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Ordered sequence of distinct vertices. Used both for Hamiltonian-path
// witnesses and for extracted induced paths.
using VertexPath = std::vector<Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbor lists are sorted and
/// duplicate-free; loops are rejected, parallel edges are merged.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  Graph(Vertex n, std::span<const Edge> edges);

  static Graph path(Vertex n);
  static Graph cycle(Vertex n);
  static Graph complete(Vertex n);

  Vertex order() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// G[s] with contiguous ids; to_parent[i] is the parent id of new vertex i,
// from_parent[v] the new id of parent vertex v or -1.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;
};

bool is_induced_path(const Graph& g, std::span<const Vertex> p);
bool is_path(const Graph& g, std::span<const Vertex> p);
bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> p);

// Throws WitnessError with a reason when p is not a Hamiltonian path of g.
void require_hamiltonian_path(const Graph& g, std::span<const Vertex> p);

// Breadth-first distances from source; -1 marks unreachable vertices.
std::vector<Vertex> bfs_distances(const Graph& g, Vertex source);

VertexPath shortest_path(const Graph& g, Vertex u, Vertex v);
VertexPath eccentric_shortest_path(const Graph& g, Vertex u);

std::vector<VertexSet> connected_components(const Graph& g);

// Maximal segments of the Hamiltonian path p avoiding x, longest first
// (ties keep path order).
std::vector<VertexPath> split_by_removal(const Graph& g, std::span<const Vertex> p,
                                         std::span<const Vertex> x);

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

}  // namespace ipath
