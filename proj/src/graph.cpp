#include "ipath/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.order()) + ")");
  }
}

}  // namespace

Graph::Graph(Vertex n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

Graph Graph::path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph Graph::cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

Graph Graph::complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
  return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool is_path(const Graph& g, std::span<const Vertex> p) {
  for (Vertex v : p) check_vertex(g, v);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> p) {
  if (!is_path(g, p)) return false;
  std::vector<std::int64_t> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<std::int64_t>(i);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (Vertex w : g.neighbors(p[i])) {
      const auto j = pos[w];
      if (j >= 0 && j != static_cast<std::int64_t>(i) + 1 &&
          j != static_cast<std::int64_t>(i) - 1) {
        return false;
      }
    }
  }
  return true;
}

bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> p) {
  if (static_cast<Vertex>(p.size()) != g.order()) return false;
  for (Vertex v : p)
    if (!g.contains(v)) return false;
  return is_path(g, p);
}

void require_hamiltonian_path(const Graph& g, std::span<const Vertex> p) {
  if (static_cast<Vertex>(p.size()) != g.order()) {
    throw WitnessError("Hamiltonian witness has " + std::to_string(p.size()) +
                       " vertices, graph has " + std::to_string(g.order()));
  }
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i])) {
      throw WitnessError("Hamiltonian witness vertex " + std::to_string(p[i]) +
                         " out of range");
    }
    if (seen[p[i]]) {
      throw WitnessError("Hamiltonian witness repeats vertex " + std::to_string(p[i]));
    }
    seen[p[i]] = 1;
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
      throw WitnessError("Hamiltonian witness step " + std::to_string(p[i - 1]) + "-" +
                         std::to_string(p[i]) + " is not an edge");
    }
  }
}

std::vector<Vertex> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<Vertex> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

namespace {

// BFS tree with parents fixed at first discovery; neighbors are visited in
// ascending id order because adjacency lists are sorted.
std::vector<Vertex> bfs_parents(const Graph& g, Vertex source, std::vector<Vertex>& dist) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  dist.assign(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return parent;
}

VertexPath trace(const std::vector<Vertex>& parent, Vertex target) {
  VertexPath out;
  for (Vertex x = target; x != -1; x = parent[x]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

VertexPath shortest_path(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<Vertex> dist;
  const auto parent = bfs_parents(g, u, dist);
  if (dist[v] < 0) {
    throw NoPathError("no path between " + std::to_string(u) + " and " + std::to_string(v));
  }
  return trace(parent, v);
}

VertexPath eccentric_shortest_path(const Graph& g, Vertex u) {
  check_vertex(g, u);
  std::vector<Vertex> dist;
  const auto parent = bfs_parents(g, u, dist);
  Vertex far = u;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (dist[x] < 0) {
      throw NoPathError("graph is disconnected: vertex " + std::to_string(x) +
                        " is unreachable from " + std::to_string(u));
    }
    if (dist[x] > dist[far]) far = x;
  }
  return trace(parent, far);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex y : g.neighbors(comp[i])) {
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexPath> split_by_removal(const Graph& g, std::span<const Vertex> p,
                                         std::span<const Vertex> x) {
  require_hamiltonian_path(g, p);
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x) {
    check_vertex(g, v);
    removed[v] = 1;
  }
  std::vector<VertexPath> segments;
  VertexPath current;
  for (Vertex v : p) {
    if (removed[v]) {
      if (!current.empty()) segments.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(v);
    }
  }
  if (!current.empty()) segments.push_back(std::move(current));
  std::stable_sort(segments.begin(), segments.end(),
                   [](const VertexPath& a, const VertexPath& b) { return a.size() > b.size(); });
  return segments;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  Subgraph out;
  out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  out.to_parent.assign(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    check_vertex(g, s[i]);
    if (out.from_parent[s[i]] >= 0) {
      throw InputError("duplicate vertex " + std::to_string(s[i]) + " in subset");
    }
    out.from_parent[s[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      const Vertex j = out.from_parent[w];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  out.graph = Graph(static_cast<Vertex>(s.size()), edges);
  return out;
}

}  // namespace ipath
