#include "ipath/representation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

std::string node_str(Node t) { return std::to_string(t); }

bool subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

template <typename T>
bool intersects(std::span<const T> a, std::span<const T> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

void check_host_path(const Representation& rep, std::span<const Node> p) {
  if (p.empty()) throw InputError("host path is empty");
  std::vector<char> seen(static_cast<std::size_t>(rep.host_order()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= rep.host_order()) {
      throw InputError("host node " + node_str(p[i]) + " out of range");
    }
    if (seen[p[i]]) throw InputError("host path repeats node " + node_str(p[i]));
    seen[p[i]] = 1;
    if (i > 0 && !rep.host_adjacent(p[i - 1], p[i])) {
      throw InputError("host nodes " + node_str(p[i - 1]) + " and " + node_str(p[i]) +
                       " are not adjacent");
    }
  }
}

// Nodes reachable from root with parents; requires an acyclic host.
struct TreeWalk {
  std::vector<Node> order;
  std::vector<Node> parent;
};

TreeWalk walk_from(const Representation& rep, Node root) {
  TreeWalk w;
  w.parent.assign(static_cast<std::size_t>(rep.host_order()), -2);
  w.parent[root] = -1;
  w.order.push_back(root);
  for (std::size_t i = 0; i < w.order.size(); ++i) {
    const Node t = w.order[i];
    for (Node u : rep.host_neighbors(t)) {
      if (w.parent[u] == -2) {
        w.parent[u] = t;
        w.order.push_back(u);
      }
    }
  }
  return w;
}

// Gains |bag(c) \ bag(parent(c))| accumulated from the root of the walk.
std::vector<std::size_t> accumulated_gain(const Representation& rep, const TreeWalk& w) {
  std::vector<std::size_t> acc(static_cast<std::size_t>(rep.host_order()), 0);
  for (Node t : w.order) {
    const Node p = w.parent[t];
    if (p < 0) continue;
    acc[t] = acc[p] + rep.bag(t).size() - intersection_size(rep.bag(t), rep.bag(p));
  }
  return acc;
}

void require_acyclic(const Representation& rep, const char* op) {
  if (rep.kind() == HostKind::kCycle) {
    throw InputError(std::string(op) + " requires a tree or path host");
  }
}

}  // namespace

std::string_view to_string(HostKind kind) {
  switch (kind) {
    case HostKind::kTree:
      return "tree";
    case HostKind::kPath:
      return "path";
    case HostKind::kCycle:
      return "cycle";
  }
  return "tree";
}

HostKind host_kind_from_string(std::string_view s) {
  if (s == "tree") return HostKind::kTree;
  if (s == "path") return HostKind::kPath;
  if (s == "cycle") return HostKind::kCycle;
  throw InputError("unknown representation kind '" + std::string(s) + "'");
}

Representation Representation::from_models(HostKind kind, Node nodes,
                                           std::span<const NodeEdge> host_edges,
                                           std::vector<NodeSet> models,
                                           std::vector<Vertex> anchors) {
  if (nodes < 1) throw ValidationError("host must have at least one node");
  Representation rep;
  rep.kind_ = kind;
  rep.host_adj_.resize(static_cast<std::size_t>(nodes));

  std::set<NodeEdge> seen;
  for (auto [a, b] : host_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
      throw ValidationError("invalid host edge {" + node_str(a) + "," + node_str(b) + "}");
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw ValidationError("duplicate host edge {" + node_str(a) + "," + node_str(b) + "}");
    }
    rep.host_adj_[a].push_back(b);
    rep.host_adj_[b].push_back(a);
  }
  for (auto& nbrs : rep.host_adj_) std::sort(nbrs.begin(), nbrs.end());

  switch (kind) {
    case HostKind::kTree: {
      if (seen.size() != static_cast<std::size_t>(nodes) - 1) {
        throw ValidationError("tree host on " + node_str(nodes) + " nodes needs " +
                              node_str(nodes - 1) + " edges");
      }
      const auto w = walk_from(rep, 0);
      if (w.order.size() != static_cast<std::size_t>(nodes)) {
        throw ValidationError("tree host is disconnected");
      }
      break;
    }
    case HostKind::kPath:
    case HostKind::kCycle: {
      std::set<NodeEdge> expected;
      for (Node i = 0; i + 1 < nodes; ++i) expected.insert({i, i + 1});
      if (kind == HostKind::kCycle) {
        if (nodes < 3) throw ValidationError("cycle host needs at least 3 nodes");
        expected.insert({0, nodes - 1});
      }
      if (seen != expected) {
        throw ValidationError(std::string(to_string(kind)) +
                              " host must list its nodes in order (edges {i,i+1})");
      }
      break;
    }
  }

  for (std::size_t v = 0; v < models.size(); ++v) {
    auto& m = models[v];
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.empty()) {
      if (kind != HostKind::kCycle) {
        throw ValidationError("model of vertex " + std::to_string(v) + " is empty");
      }
      continue;
    }
    if (m.front() < 0 || m.back() >= nodes) {
      throw ValidationError("model of vertex " + std::to_string(v) + " uses a node out of range");
    }
    // Connectivity inside the host.
    std::vector<char> in(static_cast<std::size_t>(nodes), 0);
    for (Node t : m) in[t] = 1;
    std::vector<Node> stack{m.front()};
    in[m.front()] = 2;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const Node t = stack.back();
      stack.pop_back();
      ++reached;
      for (Node u : rep.host_adj_[t]) {
        if (in[u] == 1) {
          in[u] = 2;
          stack.push_back(u);
        }
      }
    }
    if (reached != m.size()) {
      throw ValidationError("model of vertex " + std::to_string(v) + " is disconnected");
    }
  }
  rep.models_ = std::move(models);

  if (!anchors.empty()) {
    if (kind != HostKind::kCycle) throw ValidationError("anchors are only defined for cycle hosts");
    if (anchors.size() != static_cast<std::size_t>(nodes)) {
      throw ValidationError("cycle host needs one anchor per node");
    }
    std::set<Vertex> distinct;
    for (Node t = 0; t < nodes; ++t) {
      const Vertex a = anchors[t];
      if (a < 0 || a >= static_cast<Vertex>(rep.models_.size())) {
        throw ValidationError("anchor of node " + node_str(t) + " out of range");
      }
      if (!distinct.insert(a).second) {
        throw ValidationError("vertex " + std::to_string(a) + " anchors two nodes");
      }
      if (!std::binary_search(rep.models_[a].begin(), rep.models_[a].end(), t)) {
        throw ValidationError("model of anchor vertex " + std::to_string(a) +
                              " does not contain its node " + node_str(t));
      }
    }
  }
  rep.anchors_ = std::move(anchors);
  rep.rebuild_bags(static_cast<Vertex>(rep.models_.size()));
  return rep;
}

Representation Representation::from_bags(HostKind kind, Node nodes,
                                         std::span<const NodeEdge> host_edges,
                                         std::span<const VertexSet> bags, Vertex graph_order,
                                         std::vector<Vertex> anchors) {
  if (static_cast<Node>(bags.size()) != nodes) {
    throw ValidationError("expected " + node_str(nodes) + " bags, got " +
                          std::to_string(bags.size()));
  }
  std::vector<NodeSet> models(static_cast<std::size_t>(graph_order));
  for (Node t = 0; t < nodes; ++t) {
    for (Vertex v : bags[t]) {
      if (v < 0 || v >= graph_order) {
        throw ValidationError("bag " + node_str(t) + " holds vertex " + std::to_string(v) +
                              " outside the graph");
      }
      models[v].push_back(t);
    }
  }
  return from_models(kind, nodes, host_edges, std::move(models), std::move(anchors));
}

void Representation::rebuild_bags(Vertex graph_order) {
  bags_.assign(host_adj_.size(), {});
  for (Vertex v = 0; v < graph_order; ++v)
    for (Node t : models_[v]) bags_[t].push_back(v);
}

void Representation::validate(const Graph& g) const {
  if (g.order() != graph_order()) {
    throw ValidationError("representation covers " + std::to_string(graph_order()) +
                          " vertices, graph has " + std::to_string(g.order()));
  }
  for (auto [u, v] : g.edges()) {
    if (models_[u].empty() || models_[v].empty()) {
      if (kind_ == HostKind::kCycle) continue;
      throw ValidationError("vertex without model");
    }
    if (!intersects<Node>(models_[u], models_[v])) {
      throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} is not covered: models do not intersect");
    }
  }
}

std::vector<NodeEdge> Representation::host_edges() const {
  std::vector<NodeEdge> out;
  for (Node a = 0; a < host_order(); ++a)
    for (Node b : host_adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool Representation::host_adjacent(Node a, Node b) const {
  const auto& n = host_adj_[a];
  return std::binary_search(n.begin(), n.end(), b);
}

int Representation::width() const {
  std::size_t w = 0;
  for (const auto& b : bags_) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

int Representation::adhesion() const {
  std::size_t a = 0;
  for (auto [s, t] : host_edges()) a = std::max(a, intersection_size(bags_[s], bags_[t]));
  return static_cast<int>(a);
}

bool Representation::varied() const {
  for (auto [s, t] : host_edges()) {
    if (subset(bags_[s], bags_[t]) || subset(bags_[t], bags_[s])) return false;
  }
  return true;
}

Representation from_bags(HostKind kind, Node nodes, std::span<const NodeEdge> host_edges,
                         std::span<const VertexSet> bags, const Graph& g) {
  auto rep = Representation::from_bags(kind, nodes, host_edges, bags, g.order());
  rep.validate(g);
  return rep;
}

VertexSet adhesion_set(const Representation& rep, Node t, Node u) {
  if (t < 0 || u < 0 || t >= rep.host_order() || u >= rep.host_order() ||
      !rep.host_adjacent(t, u)) {
    throw InputError("{" + node_str(t) + "," + node_str(u) + "} is not a host edge");
  }
  VertexSet out;
  std::set_intersection(rep.bag(t).begin(), rep.bag(t).end(), rep.bag(u).begin(),
                        rep.bag(u).end(), std::back_inserter(out));
  return out;
}

Subgraph torso(const Representation& rep, const Graph& g, Node t) {
  const auto b = rep.bag(t);
  Subgraph base = induced_subgraph(g, b);
  std::vector<Edge> edges = base.graph.edges();
  for (Node u : rep.host_neighbors(t)) {
    const auto adh = adhesion_set(rep, t, u);
    for (std::size_t i = 0; i < adh.size(); ++i)
      for (std::size_t j = i + 1; j < adh.size(); ++j)
        edges.emplace_back(base.from_parent[adh[i]], base.from_parent[adh[j]]);
  }
  base.graph = Graph(base.graph.order(), edges);
  return base;
}

VariedResult make_varied(const Representation& rep, const Graph& g) {
  require_acyclic(rep, "make_varied");
  const Node m = rep.host_order();
  std::vector<Node> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Node x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  // Bag of each class representative; a merged class keeps the larger bag.
  std::vector<VertexSet> bag = rep.bags();
  const auto edges = rep.host_edges();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges) {
      const Node ra = find(a);
      const Node rb = find(b);
      if (ra == rb) continue;
      if (subset(bag[ra], bag[rb])) {
        parent[ra] = rb;
        changed = true;
      } else if (subset(bag[rb], bag[ra])) {
        parent[rb] = ra;
        changed = true;
      }
    }
  }

  // Classes are numbered by their least original node, which keeps path
  // hosts in path order.
  std::vector<Node> class_id(static_cast<std::size_t>(m), -1);
  std::vector<Node> node_map(static_cast<std::size_t>(m));
  Node next = 0;
  for (Node t = 0; t < m; ++t) {
    const Node r = find(t);
    if (class_id[r] < 0) class_id[r] = next++;
    node_map[t] = class_id[r];
  }
  std::set<NodeEdge> new_edges;
  for (auto [a, b] : edges) {
    const Node x = node_map[a];
    const Node y = node_map[b];
    if (x != y) new_edges.insert({std::min(x, y), std::max(x, y)});
  }
  std::vector<NodeSet> models(rep.models().size());
  for (std::size_t v = 0; v < models.size(); ++v)
    for (Node t : rep.model(static_cast<Vertex>(v))) models[v].push_back(node_map[t]);
  const std::vector<NodeEdge> edge_list(new_edges.begin(), new_edges.end());
  auto out = Representation::from_models(rep.kind(), next, edge_list, std::move(models));
  out.validate(g);
  return {std::move(out), std::move(node_map)};
}

std::size_t path_weight(const Representation& rep, std::span<const Node> p) {
  check_host_path(rep, p);
  std::vector<char> on(static_cast<std::size_t>(rep.host_order()), 0);
  for (Node t : p) on[t] = 1;
  std::size_t count = 0;
  for (const auto& m : rep.models()) {
    if (std::any_of(m.begin(), m.end(), [&](Node t) { return on[t] != 0; })) ++count;
  }
  return count;
}

std::size_t node_weight(const Representation& rep, Node x) {
  require_acyclic(rep, "node_weight");
  if (x < 0 || x >= rep.host_order()) throw InputError("host node " + node_str(x) + " out of range");
  const auto w = walk_from(rep, x);
  const auto acc = accumulated_gain(rep, w);
  return *std::max_element(acc.begin(), acc.end());
}

WeightedPath max_weight_path(const Representation& rep) {
  require_acyclic(rep, "max_weight_path");
  const Node m = rep.host_order();
  if (m > kMaxWeightPathHostCap) {
    throw ParameterError("host has " + node_str(m) + " nodes, above the cap of " +
                         node_str(kMaxWeightPathHostCap));
  }
  if (m == 1) return {{0}, rep.bag(0).size()};

  std::vector<Node> leaves;
  for (Node t = 0; t < m; ++t)
    if (rep.host_neighbors(t).size() == 1) leaves.push_back(t);

  std::size_t best = 0;
  Node best_a = -1;
  Node best_b = -1;
  for (Node a : leaves) {
    const auto w = walk_from(rep, a);
    const auto acc = accumulated_gain(rep, w);
    for (Node b : leaves) {
      if (b <= a) continue;
      const std::size_t weight = rep.bag(a).size() + acc[b];
      if (best_a < 0 || weight > best) {
        best = weight;
        best_a = a;
        best_b = b;
      }
    }
  }
  const auto w = walk_from(rep, best_a);
  NodePath path;
  for (Node t = best_b; t != -1; t = w.parent[t]) path.push_back(t);
  std::reverse(path.begin(), path.end());
  return {std::move(path), best};
}

NodePath longest_host_path(const Representation& rep) {
  require_acyclic(rep, "longest_host_path");
  auto farthest = [&](Node root) {
    const auto w = walk_from(rep, root);
    std::vector<Node> depth(static_cast<std::size_t>(rep.host_order()), 0);
    Node far = root;
    for (Node t : w.order) {
      if (w.parent[t] >= 0) depth[t] = depth[w.parent[t]] + 1;
      if (depth[t] > depth[far] || (depth[t] == depth[far] && t < far)) far = t;
    }
    return std::pair{far, w};
  };
  const Node a = farthest(0).first;
  const auto [b, w] = farthest(a);
  NodePath path;
  for (Node t = b; t != -1; t = w.parent[t]) path.push_back(t);
  std::reverse(path.begin(), path.end());
  return path;
}

Representation restrict_to_path(const Representation& rep, const Graph& g,
                                std::span<const Node> p) {
  check_host_path(rep, p);
  std::vector<Node> pos(static_cast<std::size_t>(rep.host_order()), -1);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<Node>(i);
  std::vector<NodeSet> models(rep.models().size());
  for (std::size_t v = 0; v < models.size(); ++v) {
    for (Node t : rep.model(static_cast<Vertex>(v)))
      if (pos[t] >= 0) models[v].push_back(pos[t]);
    if (models[v].empty()) {
      throw InputError("model of vertex " + std::to_string(v) + " misses the host path");
    }
  }
  std::vector<NodeEdge> edges;
  for (Node i = 0; i + 1 < static_cast<Node>(p.size()); ++i) edges.emplace_back(i, i + 1);
  auto out = Representation::from_models(HostKind::kPath, static_cast<Node>(p.size()), edges,
                                         std::move(models));
  out.validate(g);
  return out;
}

Representation restrict_to_vertices(const Representation& rep, std::span<const Vertex> to_parent) {
  std::vector<NodeSet> models;
  models.reserve(to_parent.size());
  for (Vertex v : to_parent) {
    const auto m = rep.model(v);
    models.emplace_back(m.begin(), m.end());
  }
  if (rep.kind() != HostKind::kPath) {
    const auto edges = rep.host_edges();
    return Representation::from_models(rep.kind(), rep.host_order(), edges, std::move(models));
  }
  Node lo = rep.host_order();
  Node hi = -1;
  for (const auto& m : models) {
    if (m.empty()) continue;
    lo = std::min(lo, m.front());
    hi = std::max(hi, m.back());
  }
  if (hi < 0) {
    lo = 0;
    hi = 0;
  }
  for (auto& m : models)
    for (Node& t : m) t -= lo;
  std::vector<NodeEdge> edges;
  for (Node i = 0; i < hi - lo; ++i) edges.emplace_back(i, i + 1);
  return Representation::from_models(HostKind::kPath, hi - lo + 1, edges, std::move(models));
}

Representation contract_models(const Representation& rep, const ContractionMap& m) {
  if (m.original_order() != rep.graph_order()) {
    throw InputError("contraction map does not match the representation");
  }
  std::vector<NodeSet> models;
  models.reserve(static_cast<std::size_t>(m.alive_count()));
  for (Vertex x : m.compact_to_id()) {
    NodeSet u;
    for (Vertex a : m.members(x)) {
      const auto mod = rep.model(a);
      u.insert(u.end(), mod.begin(), mod.end());
    }
    models.push_back(std::move(u));
  }
  const auto edges = rep.host_edges();
  return Representation::from_models(rep.kind(), rep.host_order(), edges, std::move(models));
}

}  // namespace ipath
