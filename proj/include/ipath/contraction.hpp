#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ipath/graph.hpp"

namespace ipath {

struct ContractionStep {
  Vertex survivor;
  Vertex absorbed;
  // Size of the survivor's member list before the merge; undoing the step
  // splits the member list at this offset.
  std::size_t survivor_size = 0;
};

/// Sequence of edge contractions applied to a source graph.
///
/// Super-vertices keep the id of the survivor of each merge; absorbed ids
/// are retired. Ids are compacted (alive ids in ascending order) only when a
/// final graph is emitted through quotient(..., compact = true).
class ContractionMap {
 public:
  ContractionMap() = default;
  explicit ContractionMap(Vertex original_n);

  Vertex original_order() const { return static_cast<Vertex>(owner_.size()); }
  const std::vector<ContractionStep>& steps() const { return steps_; }

  bool alive(Vertex x) const { return !members_[x].empty(); }
  Vertex owner(Vertex original) const { return owner_[original]; }
  // Sorted branch set of super-vertex x (empty when retired).
  VertexSet branch_set(Vertex x) const;
  std::span<const Vertex> members(Vertex x) const { return members_[x]; }

  Vertex alive_count() const { return alive_count_; }
  // compact id -> super-vertex id, and the inverse (-1 for retired ids).
  std::vector<Vertex> compact_to_id() const;
  std::vector<Vertex> id_to_compact() const;

  // Merges absorbed into survivor. The caller guarantees adjacency in the
  // current quotient; both ids must be alive and distinct.
  void contract(Vertex survivor, Vertex absorbed);

  // Quotient of original by the branch sets. With compact = false the
  // result has original_order() vertices and retired ids are isolated.
  Graph quotient(const Graph& original, bool compact) const;

  // Every branch set induces a connected subgraph of original.
  bool branch_sets_connected(const Graph& original) const;

 private:
  std::vector<ContractionStep> steps_;
  std::vector<std::vector<Vertex>> members_;  // append order
  std::vector<Vertex> owner_;
  Vertex alive_count_ = 0;
};

// g is the current uncompacted quotient of m. Returns g/uv with u surviving.
std::pair<Graph, ContractionMap> contract_path_edge(const Graph& g, const ContractionMap& m,
                                                    Vertex u, Vertex v);

// p is an induced path of m.quotient(original, true). Returns an induced path
// of original of order at least |p|. Each undone step is re-verified; a
// failure throws InternalError.
VertexPath lift_induced_path(const Graph& original, const ContractionMap& m,
                             std::span<const Vertex> p);

}  // namespace ipath
