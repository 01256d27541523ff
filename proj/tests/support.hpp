#pragma once

// Small graph builders and brute-force reference checks used by the tests.
// The reference routines deliberately share no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ipath/graph.hpp"

namespace ipath::testing {

inline Graph make_graph(Vertex n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline Graph star(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

// Hub 0 joined to the cycle 1..n-1.
inline Graph wheel(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i + 1 < n ? i + 1 : 1);
  }
  return Graph(n, e);
}

inline Graph hypercube(int d) {
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v >> b & 1)) e.emplace_back(v, v | (Vertex{1} << b));
  return Graph(n, e);
}

inline VertexPath gray_code(int d) {
  VertexPath p;
  for (Vertex i = 0; i < (Vertex{1} << d); ++i) p.push_back(i ^ (i >> 1));
  return p;
}

inline VertexPath identity_path(Vertex n) {
  VertexPath p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Graph random_tree(std::mt19937_64& rng, Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  return Graph(n, e);
}

// Random connected graph: a spanning tree plus extra random edges.
inline Graph random_connected(std::mt19937_64& rng, Vertex n, int extra) {
  std::set<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (int i = 0; i < extra && n > 1; ++i) {
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    e.emplace(std::min(a, b), std::max(a, b));
  }
  return Graph(n, std::vector<Edge>(e.begin(), e.end()));
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, Vertex n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
  return Graph(g.order(), e);
}

// Adjacency-matrix reference for inducedness.
inline bool naive_induced(const Graph& g, const std::vector<Vertex>& p) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : g.edges()) adj[a][b] = adj[b][a] = 1;
  std::set<Vertex> seen;
  for (Vertex v : p) {
    if (v < 0 || v >= g.order() || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (bool(adj[p[i]][p[j]]) != (j == i + 1)) return false;
  return true;
}

namespace detail {
inline void grow(const Graph& g, std::vector<Vertex>& path, std::vector<int>& touch, std::size_t& best) {
  best = std::max(best, path.size());
  const Vertex last = path.back();
  for (Vertex w : g.neighbors(last)) {
    // w may touch only the current endpoint among path vertices and their neighbourhoods.
    if (touch[w] != 1) continue;
    bool on_path = std::find(path.begin(), path.end(), w) != path.end();
    if (on_path) continue;
    for (Vertex y : g.neighbors(w)) ++touch[y];
    ++touch[w];
    path.push_back(w);
    grow(g, path, touch, best);
    path.pop_back();
    --touch[w];
    for (Vertex y : g.neighbors(w)) --touch[y];
  }
}
}  // namespace detail

// Longest induced path by plain depth-first enumeration. touch[v] counts
// path vertices in the closed neighbourhood of v.
inline std::size_t naive_longest_induced_path(const Graph& g) {
  std::size_t best = 0;
  std::vector<int> touch(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> path{s};
    for (Vertex y : g.neighbors(s)) ++touch[y];
    ++touch[s];
    detail::grow(g, path, touch, best);
    --touch[s];
    for (Vertex y : g.neighbors(s)) --touch[y];
  }
  return best;
}

// Clique number by subset enumeration over neighbourhoods (n <= ~40 sparse).
inline std::size_t naive_clique_number(const Graph& g) {
  std::size_t best = g.order() > 0 ? 1 : 0;
  std::vector<Vertex> clique;
  auto rec = [&](auto&& self, std::vector<Vertex> cand) -> void {
    best = std::max(best, clique.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const Vertex v = cand[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };
  rec(rec, identity_path(g.order()));
  return best;
}

}  // namespace ipath::testing
