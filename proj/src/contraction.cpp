#include "ipath/contraction.hpp"

#include <algorithm>
#include <string>

#include "ipath/errors.hpp"

namespace ipath {

ContractionMap::ContractionMap(Vertex original_n)
    : members_(static_cast<std::size_t>(original_n)),
      owner_(static_cast<std::size_t>(original_n)),
      alive_count_(original_n) {
  for (Vertex v = 0; v < original_n; ++v) {
    members_[v].push_back(v);
    owner_[v] = v;
  }
}

VertexSet ContractionMap::branch_set(Vertex x) const {
  VertexSet s(members_[x].begin(), members_[x].end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Vertex> ContractionMap::compact_to_id() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(alive_count_));
  for (Vertex x = 0; x < original_order(); ++x)
    if (alive(x)) out.push_back(x);
  return out;
}

std::vector<Vertex> ContractionMap::id_to_compact() const {
  std::vector<Vertex> out(members_.size(), -1);
  Vertex next = 0;
  for (Vertex x = 0; x < original_order(); ++x)
    if (alive(x)) out[x] = next++;
  return out;
}

void ContractionMap::contract(Vertex survivor, Vertex absorbed) {
  const Vertex n = original_order();
  if (survivor < 0 || absorbed < 0 || survivor >= n || absorbed >= n || survivor == absorbed ||
      !alive(survivor) || !alive(absorbed)) {
    throw InputError("cannot contract " + std::to_string(survivor) + " and " +
                     std::to_string(absorbed));
  }
  steps_.push_back({survivor, absorbed, members_[survivor].size()});
  for (Vertex a : members_[absorbed]) owner_[a] = survivor;
  auto& dst = members_[survivor];
  dst.insert(dst.end(), members_[absorbed].begin(), members_[absorbed].end());
  members_[absorbed].clear();
  --alive_count_;
}

Graph ContractionMap::quotient(const Graph& original, bool compact) const {
  if (original.order() != original_order()) {
    throw InputError("contraction map does not match the graph order");
  }
  const auto relabel = compact ? id_to_compact() : std::vector<Vertex>{};
  std::vector<Edge> edges;
  for (auto [a, b] : original.edges()) {
    Vertex x = owner_[a];
    Vertex y = owner_[b];
    if (x == y) continue;
    if (compact) {
      x = relabel[x];
      y = relabel[y];
    }
    edges.emplace_back(x, y);
  }
  return Graph(compact ? alive_count_ : original_order(), edges);
}

bool ContractionMap::branch_sets_connected(const Graph& original) const {
  std::vector<char> seen(members_.size(), 0);
  for (Vertex x = 0; x < original_order(); ++x) {
    if (!alive(x)) continue;
    std::vector<Vertex> stack{members_[x].front()};
    seen[members_[x].front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const Vertex a = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex b : original.neighbors(a)) {
        if (!seen[b] && owner_[b] == x) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    if (reached != members_[x].size()) return false;
  }
  return true;
}

std::pair<Graph, ContractionMap> contract_path_edge(const Graph& g, const ContractionMap& m,
                                                    Vertex u, Vertex v) {
  if (g.order() != m.original_order()) {
    throw InputError("graph is not the uncompacted quotient of the contraction map");
  }
  if (!g.contains(u) || !g.contains(v) || !g.adjacent(u, v)) {
    throw InputError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  ContractionMap next = m;
  next.contract(u, v);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    const Vertex x = a == v ? u : a;
    const Vertex y = b == v ? u : b;
    if (x != y) edges.emplace_back(x, y);
  }
  return {Graph(g.order(), edges), std::move(next)};
}

namespace {

// Replays a contraction map backwards. Members and owners describe the
// quotient before the step currently being undone.
class Unwinder {
 public:
  Unwinder(const Graph& original, const ContractionMap& m) : g_(original) {
    members_.resize(static_cast<std::size_t>(m.original_order()));
    owner_.resize(members_.size());
    for (Vertex x = 0; x < m.original_order(); ++x) {
      auto mem = m.members(x);
      members_[x].assign(mem.begin(), mem.end());
      owner_[x] = m.owner(x);
    }
  }

  void undo(const ContractionStep& s) {
    auto& src = members_[s.survivor];
    members_[s.absorbed].assign(src.begin() + static_cast<std::ptrdiff_t>(s.survivor_size),
                                src.end());
    src.resize(s.survivor_size);
    for (Vertex a : members_[s.absorbed]) owner_[a] = s.absorbed;
  }

  bool adjacent(Vertex x, Vertex y) const {
    if (members_[x].size() > members_[y].size()) std::swap(x, y);
    for (Vertex a : members_[x])
      for (Vertex b : g_.neighbors(a))
        if (owner_[b] == y) return true;
    return false;
  }

  // Every quotient neighbor of x that lies on the path must sit next to x.
  bool locally_induced(Vertex x, const std::vector<std::int64_t>& pos) const {
    const auto px = pos[x];
    for (Vertex a : members_[x]) {
      for (Vertex b : g_.neighbors(a)) {
        const Vertex y = owner_[b];
        if (y == x) continue;
        const auto py = pos[y];
        if (py >= 0 && py != px - 1 && py != px + 1) return false;
      }
    }
    return true;
  }

 private:
  const Graph& g_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<Vertex> owner_;
};

}  // namespace

VertexPath lift_induced_path(const Graph& original, const ContractionMap& m,
                             std::span<const Vertex> p) {
  if (original.order() != m.original_order()) {
    throw InputError("contraction map does not match the graph order");
  }
  const auto ids = m.compact_to_id();
  VertexPath path;
  path.reserve(p.size());
  for (Vertex c : p) {
    if (c < 0 || c >= static_cast<Vertex>(ids.size())) {
      throw InputError("path vertex " + std::to_string(c) + " not in the contracted graph");
    }
    path.push_back(ids[c]);
  }

  std::vector<std::int64_t> pos(static_cast<std::size_t>(m.original_order()), -1);
  auto reindex = [&](std::size_t from) {
    for (std::size_t i = from; i < path.size(); ++i) pos[path[i]] = static_cast<std::int64_t>(i);
  };
  reindex(0);

  Unwinder state(original, m);
  const auto& steps = m.steps();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    state.undo(*it);
    const Vertex u = it->survivor;
    const Vertex v = it->absorbed;
    const auto i = pos[u];
    if (i < 0) continue;
    const auto idx = static_cast<std::size_t>(i);
    const Vertex prev = idx > 0 ? path[idx - 1] : -1;
    const Vertex next = idx + 1 < path.size() ? path[idx + 1] : -1;
    auto fits = [&](Vertex x) {
      return (prev < 0 || state.adjacent(prev, x)) && (next < 0 || state.adjacent(next, x));
    };

    std::vector<Vertex> changed;
    if (fits(u)) {
      changed = {u};
    } else if (fits(v)) {
      pos[u] = -1;
      path[idx] = v;
      pos[v] = i;
      changed = {v};
    } else if (prev >= 0 && next >= 0 && state.adjacent(prev, u) && state.adjacent(next, v)) {
      path.insert(path.begin() + i + 1, v);
      reindex(idx + 1);
      changed = {u, v};
    } else if (prev >= 0 && next >= 0 && state.adjacent(prev, v) && state.adjacent(next, u)) {
      path[idx] = v;
      path.insert(path.begin() + i + 1, u);
      reindex(idx);
      changed = {u, v};
    } else {
      throw InternalError("lift failed undoing contraction of " + std::to_string(v) +
                          " into " + std::to_string(u) + ": no substitution case applies");
    }
    for (Vertex c : changed) {
      if (!state.locally_induced(c, pos)) {
        throw InternalError("lift produced a chord at vertex " + std::to_string(c) +
                            " after undoing contraction of " + std::to_string(v) + " into " +
                            std::to_string(u));
      }
    }
  }

  if (!is_induced_path(original, path)) {
    throw InternalError("lifted path is not induced in the original graph");
  }
  return path;
}

}  // namespace ipath
