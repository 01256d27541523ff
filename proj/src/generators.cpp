#include "ipath/generators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "ipath/errors.hpp"
#include "ipath/exact.hpp"

namespace ipath {

namespace {

// Graph plus path representation under construction.
struct Built {
  Vertex n = 0;
  std::vector<Edge> edges;
  VertexPath ham;
  std::vector<NodeSet> models;
  Node nodes = 1;
};

NodeSet node_range(Node lo, Node hi) {
  NodeSet s(static_cast<std::size_t>(hi - lo + 1));
  std::iota(s.begin(), s.end(), lo);
  return s;
}

Built build_clique(Vertex n) {
  Built b;
  b.n = n;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.edges.emplace_back(u, v);
  b.ham.resize(static_cast<std::size_t>(n));
  std::iota(b.ham.begin(), b.ham.end(), 0);
  b.models.assign(static_cast<std::size_t>(n), NodeSet{0});
  return b;
}

Built build_path(Vertex n) {
  Built b;
  b.n = n;
  b.nodes = std::max<Node>(1, n - 1);
  for (Vertex v = 0; v + 1 < n; ++v) b.edges.emplace_back(v, v + 1);
  b.ham.resize(static_cast<std::size_t>(n));
  std::iota(b.ham.begin(), b.ham.end(), 0);
  for (Vertex v = 0; v < n; ++v)
    b.models.push_back(node_range(std::max<Node>(0, v - 1), std::min<Node>(v, b.nodes - 1)));
  return b;
}

std::int64_t worstcase_q(std::int64_t n, std::int64_t k) {
  return static_cast<std::int64_t>(iroot(BigInt(n) * n, static_cast<unsigned>(k))) + 1;
}

// Paths P_1..P_q with u_i joined to all of P_{i+1}. Vertex u_i has id i-1;
// the other vertices of each P_i follow, block by block.
Built build_three(std::int64_t n) {
  const auto q = static_cast<Vertex>(worstcase_q(n, 3));
  Built b;
  if (q == 1) {
    b.n = 1;
    b.ham = {0};
    b.models = {NodeSet{0}};
    return b;
  }
  // Block i (1 <= i < q) carries P_{i+1} on nodes base[i]..base[i]+i.
  std::vector<Node> base(static_cast<std::size_t>(q) + 1, 0);
  for (Vertex i = 2; i < q; ++i) base[i] = base[i - 1] + i;
  b.nodes = base[q - 1] + q;
  b.n = q;
  b.models.resize(static_cast<std::size_t>(q));
  // x[i][j], j = 1..i-1, is the j-th vertex of P_i counted from the far end.
  std::vector<std::vector<Vertex>> x(static_cast<std::size_t>(q) + 1);
  for (Vertex i = 2; i <= q; ++i) {
    x[i].assign(static_cast<std::size_t>(i), -1);
    for (Vertex j = 1; j < i; ++j) {
      x[i][j] = b.n++;
      const Node bb = base[i - 1];
      b.models.push_back(NodeSet{bb + j - 1, bb + j});
    }
  }
  auto u = [](Vertex i) { return i - 1; };
  for (Vertex i = 1; i <= q; ++i) {
    Node lo = i == 1 ? base[1] : base[i - 1] + (i - 1);
    Node hi = i < q ? base[i] + i : lo;
    b.models[u(i)] = node_range(lo, hi);
  }
  for (Vertex i = 1; i < q; ++i) {
    b.edges.emplace_back(u(i), u(i + 1));
    for (Vertex j = 1; j <= i; ++j) b.edges.emplace_back(u(i), x[i + 1][j]);
    for (Vertex j = 1; j < i; ++j) b.edges.emplace_back(x[i + 1][j], x[i + 1][j + 1]);
    b.edges.emplace_back(x[i + 1][i], u(i + 1));
  }
  for (Vertex i = q; i >= 1; --i) {
    b.ham.push_back(u(i));
    for (Vertex j = i - 1; j >= 1; --j) b.ham.push_back(x[i][j]);
  }
  return b;
}

std::int64_t worstcase_order(std::int64_t n, std::int64_t k);

// Order of the recursive copies. The literal choice ceil((n-q)/(q-1)) can
// make the copies too large for the induced-path bound when q - 1 falls
// short of n^(2/k), so take the least order whose copies still give n
// vertices. It never exceeds the literal value.
std::int64_t worstcase_sub(std::int64_t n, std::int64_t k, std::int64_t q) {
  const std::int64_t literal = (n - q + q - 2) / (q - 1);
  for (std::int64_t m = 2; m < literal; ++m) {
    if (q + (q - 1) * worstcase_order(m, std::min(k - 2, m)) >= n) return m;
  }
  return literal;
}

std::int64_t worstcase_order(std::int64_t n, std::int64_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> memo;
  if (k == n || k == 2) return n;
  const std::int64_t q = worstcase_q(n, k);
  if (k == 3) return q * (q + 1) / 2;
  if (q >= n) return q;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  }
  const std::int64_t m = worstcase_sub(n, k, q);
  const std::int64_t order = q + (q - 1) * worstcase_order(m, std::min(k - 2, m));
  std::lock_guard lock(mu);
  memo[{n, k}] = order;
  return order;
}

Built build_worstcase(std::int64_t n, std::int64_t k) {
  if (k == n) return build_clique(static_cast<Vertex>(n));
  if (k == 2) return build_path(static_cast<Vertex>(n));
  if (k == 3) return build_three(n);
  const std::int64_t q = worstcase_q(n, k);
  if (q >= n) return build_path(static_cast<Vertex>(q));
  const std::int64_t n_sub = worstcase_sub(n, k, q);
  const std::int64_t k_sub = std::min(k - 2, n_sub);
  const Built h = build_worstcase(n_sub, k_sub);

  Built b;
  const auto qq = static_cast<Vertex>(q);
  b.n = qq + (qq - 1) * h.n;
  b.nodes = (qq - 1) * h.nodes;
  b.models.resize(static_cast<std::size_t>(b.n));
  for (Vertex i = 0; i < qq; ++i) {
    const Node lo = i == 0 ? 0 : (i - 1) * h.nodes;
    const Node hi = i == qq - 1 ? b.nodes - 1 : (i + 1) * h.nodes - 1;
    b.models[i] = node_range(lo, hi);
    if (i + 1 < qq) b.edges.emplace_back(i, i + 1);
  }
  for (Vertex c = 0; c + 1 < qq; ++c) {
    const Vertex off = qq + c * h.n;
    const Node node_off = c * h.nodes;
    for (auto [a, d] : h.edges) b.edges.emplace_back(a + off, d + off);
    for (Vertex v = 0; v < h.n; ++v) {
      b.edges.emplace_back(c, v + off);
      b.edges.emplace_back(c + 1, v + off);
      NodeSet m = h.models[v];
      for (Node& t : m) t += node_off;
      b.models[v + off] = std::move(m);
    }
    b.ham.push_back(c);
    for (Vertex v : h.ham) b.ham.push_back(v + off);
  }
  b.ham.push_back(qq - 1);
  return b;
}

std::vector<NodeEdge> path_host_edges(Node nodes) {
  std::vector<NodeEdge> e;
  for (Node i = 0; i + 1 < nodes; ++i) e.emplace_back(i, i + 1);
  return e;
}

GeneratedInstance finish(Built b, HostKind kind, std::vector<NodeEdge> host_edges,
                         std::string family) {
  GeneratedInstance inst;
  inst.graph = Graph(b.n, b.edges);
  inst.ham = std::move(b.ham);
  inst.rep = Representation::from_models(kind, b.nodes, host_edges, std::move(b.models));
  inst.family = std::move(family);
  return inst;
}

GeneratedInstance finish_path(Built b, std::string family) {
  const Node nodes = b.nodes;
  return finish(std::move(b), HostKind::kPath, path_host_edges(nodes), std::move(family));
}

// Relabels vertex v as perm[v].
GeneratedInstance relabel(GeneratedInstance inst, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : inst.graph.edges()) edges.emplace_back(perm[u], perm[v]);
  for (Vertex& v : inst.ham) v = perm[v];
  if (inst.rep) {
    std::vector<NodeSet> models(inst.rep->models().size());
    for (std::size_t v = 0; v < models.size(); ++v) models[perm[v]] = inst.rep->models()[v];
    const auto host = inst.rep->host_edges();
    inst.rep = Representation::from_models(inst.rep->kind(), inst.rep->host_order(), host,
                                           std::move(models));
  }
  inst.graph = Graph(inst.graph.order(), edges);
  return inst;
}

std::vector<Vertex> random_permutation(Vertex n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (Vertex i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<Vertex> pick(0, i);
    std::swap(perm[i], perm[pick(rng)]);
  }
  return perm;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Vertex i gets the interval [i, i + len_i] with 1 <= len_i <= k - 1, so at
// most k intervals share a node and consecutive ids always meet.
GeneratedInstance random_interval(std::mt19937_64& rng, Vertex n, std::int64_t k) {
  Built b;
  b.n = n;
  b.nodes = n;
  for (Vertex i = 0; i < n; ++i) {
    const auto len = static_cast<Vertex>(uniform(rng, 1, k - 1));
    const Vertex hi = std::min(n - 1, i + len);
    b.models.push_back(node_range(i, hi));
    for (Vertex j = i + 1; j <= hi; ++j) b.edges.emplace_back(i, j);
    b.ham.push_back(i);
  }
  return finish_path(std::move(b), "random-interval");
}

// (k-1)-tree grown from a k-clique. Each new vertex is attached to a
// (k-1)-clique that contains two consecutive witness vertices (it is then
// inserted between them) or an end of the witness (it becomes the new end).
GeneratedInstance random_ktree(std::mt19937_64& rng, Vertex n, std::int64_t k) {
  const auto w = static_cast<Vertex>(k - 1);
  std::vector<Edge> edges;
  std::vector<VertexSet> bags;
  std::vector<NodeEdge> host;
  std::vector<Vertex> next(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> prev(static_cast<std::size_t>(n), -1);
  Vertex head = 0;
  Vertex tail = w;
  VertexSet first(static_cast<std::size_t>(w) + 1);
  std::iota(first.begin(), first.end(), 0);
  for (Vertex u = 0; u <= w; ++u) {
    for (Vertex v = u + 1; v <= w; ++v) edges.emplace_back(u, v);
    if (u < w) next[u] = u + 1;
    if (u > 0) prev[u] = u - 1;
  }
  bags.push_back(first);
  std::vector<Node> bag_of(static_cast<std::size_t>(n), 0);  // a bag holding each vertex

  for (Vertex v = w + 1; v < n; ++v) {
    Node parent = -1;
    VertexSet clique;
    Vertex between = -1;  // insert v after this vertex; -2 = new head, -3 = new tail
    for (int attempt = 0; attempt < 16 && between == -1; ++attempt) {
      const auto t = static_cast<Node>(uniform(rng, 0, static_cast<std::int64_t>(bags.size()) - 1));
      const auto drop = static_cast<std::size_t>(uniform(rng, 0, w));
      VertexSet c = bags[t];
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(drop));
      std::vector<Vertex> options;
      for (Vertex a : c)
        if (next[a] >= 0 && std::binary_search(c.begin(), c.end(), next[a])) options.push_back(a);
      if (std::binary_search(c.begin(), c.end(), head)) options.push_back(-2);
      if (std::binary_search(c.begin(), c.end(), tail)) options.push_back(-3);
      if (options.empty()) continue;
      between = options[static_cast<std::size_t>(
          uniform(rng, 0, static_cast<std::int64_t>(options.size()) - 1))];
      parent = t;
      clique = std::move(c);
    }
    if (between == -1) {
      // A bag holding the tail always yields a clique through the tail.
      parent = bag_of[tail];
      clique = bags[parent];
      for (std::size_t i = 0; i < clique.size(); ++i) {
        if (clique[i] != tail) {
          clique.erase(clique.begin() + static_cast<std::ptrdiff_t>(i));
          break;
        }
      }
      between = -3;
    }
    for (Vertex a : clique) edges.emplace_back(a, v);
    if (between == -2) {
      next[v] = head;
      prev[head] = v;
      head = v;
    } else if (between == -3) {
      prev[v] = tail;
      next[tail] = v;
      tail = v;
    } else {
      const Vertex b = next[between];
      next[between] = v;
      prev[v] = between;
      next[v] = b;
      prev[b] = v;
    }
    VertexSet bag = clique;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    bags.push_back(std::move(bag));
    const auto id = static_cast<Node>(bags.size() - 1);
    host.emplace_back(parent, id);
    bag_of[v] = id;
  }

  GeneratedInstance inst;
  inst.graph = Graph(n, edges);
  for (Vertex v = head; v >= 0; v = next[v]) inst.ham.push_back(v);
  inst.rep = Representation::from_bags(HostKind::kTree, static_cast<Node>(bags.size()), host, bags,
                                       n);
  inst.family = "random-ktree";
  return inst;
}

// Path 0..n-1 plus random chords between vertices of degree below delta.
GeneratedInstance random_bounded_degree(std::mt19937_64& rng, Vertex n, std::int64_t delta) {
  std::set<Edge> edges;
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v + 1 < n; ++v) {
    edges.emplace(v, v + 1);
    ++deg[v];
    ++deg[v + 1];
  }
  const std::int64_t tries = static_cast<std::int64_t>(n) * delta;
  for (std::int64_t t = 0; t < tries && n > 2; ++t) {
    auto a = static_cast<Vertex>(uniform(rng, 0, n - 1));
    auto b = static_cast<Vertex>(uniform(rng, 0, n - 1));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (deg[a] >= delta || deg[b] >= delta || edges.count({a, b})) continue;
    edges.emplace(a, b);
    ++deg[a];
    ++deg[b];
  }
  GeneratedInstance inst;
  const std::vector<Edge> list(edges.begin(), edges.end());
  inst.graph = Graph(n, list);
  inst.ham.resize(static_cast<std::size_t>(n));
  std::iota(inst.ham.begin(), inst.ham.end(), 0);
  inst.family = "random-bounded-degree";
  return inst;
}

void check_vertex_count(std::int64_t n, const char* what) {
  if (n > 10'000'000) throw ParameterError(std::string(what) + " is too large");
}

}  // namespace

void validate_instance(const GeneratedInstance& inst) {
  require_hamiltonian_path(inst.graph, inst.ham);
  if (inst.rep) inst.rep->validate(inst.graph);
}

WorstcaseParams worstcase_params(std::int64_t n, std::int64_t k) {
  if (k < 2 || k > n) throw ParameterError("worst-case family needs 2 <= k <= n");
  if (k == n || k == 2) return {};
  const std::int64_t q = worstcase_q(n, k);
  if (k == 3 || q >= n) return {q, 0};
  return {q, worstcase_sub(n, k, q)};
}

GeneratedInstance gen_worstcase_interval(std::int64_t n, std::int64_t k) {
  check_vertex_count(n, "n");
  const auto params = worstcase_params(n, k);
  auto inst = finish_path(build_worstcase(n, k), "worstcase");
  inst.meta = {{"n", n}, {"k", k}, {"q", params.q}, {"n_sub", params.n_sub},
               {"order", inst.graph.order()}};
  return inst;
}

GeneratedInstance gen_outerplanar_family(int generation) {
  if (generation < 1 || generation > 20) throw ParameterError("generation must be in 1..20");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<VertexSet> bags{{0, 1, 2}};
  std::vector<NodeEdge> host;
  std::vector<Vertex> outer{0, 1, 2};
  std::vector<Node> edge_bag{0, 0, 0};  // bag holding outer edge (outer[i], outer[i+1])
  Vertex n = 3;
  for (int g = 2; g <= generation; ++g) {
    std::vector<Vertex> next_outer;
    std::vector<Node> next_bag;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      const Vertex x = outer[i];
      const Vertex y = outer[(i + 1) % outer.size()];
      const Vertex w = n++;
      edges.emplace_back(x, w);
      edges.emplace_back(y, w);
      VertexSet bag{x, y, w};
      std::sort(bag.begin(), bag.end());
      bags.push_back(std::move(bag));
      const auto id = static_cast<Node>(bags.size() - 1);
      host.emplace_back(edge_bag[i], id);
      next_outer.push_back(x);
      next_bag.push_back(id);
      next_outer.push_back(w);
      next_bag.push_back(id);
    }
    outer = std::move(next_outer);
    edge_bag = std::move(next_bag);
  }
  GeneratedInstance inst;
  inst.graph = Graph(n, edges);
  inst.ham = outer;
  inst.rep = Representation::from_bags(HostKind::kTree, static_cast<Node>(bags.size()), host, bags,
                                       n);
  inst.family = "outerplanar";
  inst.meta = {{"generation", generation}, {"order", n}};
  return inst;
}

GeneratedInstance gen_path_power(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw ParameterError("path power needs n >= 1 and k >= 1");
  check_vertex_count(n, "n");
  const auto nn = static_cast<Vertex>(n);
  const auto kk = static_cast<Vertex>(std::min<std::int64_t>(k, n - 1));
  Built b;
  b.n = nn;
  b.nodes = std::max<Node>(1, nn - kk);
  for (Vertex v = 0; v < nn; ++v) {
    for (Vertex u = v + 1; u <= std::min(nn - 1, v + kk); ++u) b.edges.emplace_back(v, u);
    b.ham.push_back(v);
    b.models.push_back(node_range(std::max<Node>(0, v - kk), std::min<Node>(v, b.nodes - 1)));
  }
  auto inst = finish_path(std::move(b), "path-power");
  inst.meta = {{"n", n}, {"k", k}};
  return inst;
}

GeneratedInstance gen_chained_cliques(std::int64_t q, std::int64_t s) {
  if (q < 1 || s < 2) throw ParameterError("chained cliques need q >= 1 and s >= 2");
  check_vertex_count(q * s, "q * s");
  const auto qq = static_cast<Vertex>(q);
  const auto step = static_cast<Vertex>(s - 1);
  Built b;
  b.n = qq * step + 1;
  b.nodes = qq;
  b.models.resize(static_cast<std::size_t>(b.n));
  for (Vertex c = 0; c < qq; ++c) {
    const Vertex lo = c * step;
    for (Vertex u = lo; u <= lo + step; ++u) {
      b.models[u].push_back(c);
      for (Vertex v = u + 1; v <= lo + step; ++v) b.edges.emplace_back(u, v);
    }
  }
  b.ham.resize(static_cast<std::size_t>(b.n));
  std::iota(b.ham.begin(), b.ham.end(), 0);
  auto inst = finish_path(std::move(b), "chained-cliques");
  inst.meta = {{"q", q}, {"s", s}, {"order", inst.graph.order()}};
  return inst;
}

std::string_view to_string(RandomProfile p) {
  switch (p) {
    case RandomProfile::kInterval:
      return "interval";
    case RandomProfile::kKtreePathBuilt:
      return "ktree-path-built";
    case RandomProfile::kBoundedDegree:
      return "bounded-degree";
  }
  return "?";
}

RandomProfile random_profile_from_string(std::string_view s) {
  if (s == "interval") return RandomProfile::kInterval;
  if (s == "ktree-path-built" || s == "ktree") return RandomProfile::kKtreePathBuilt;
  if (s == "bounded-degree") return RandomProfile::kBoundedDegree;
  throw ParameterError("unknown random profile '" + std::string(s) + "'");
}

GeneratedInstance gen_random_validated(std::uint64_t seed, RandomProfile profile, std::int64_t n,
                                       std::int64_t k) {
  check_vertex_count(n, "n");
  std::mt19937_64 rng(seed);
  GeneratedInstance inst;
  const auto nn = static_cast<Vertex>(n);
  switch (profile) {
    case RandomProfile::kInterval:
      if (n < 1 || k < 2) throw ParameterError("interval profile needs n >= 1 and k >= 2");
      inst = random_interval(rng, nn, k);
      break;
    case RandomProfile::kKtreePathBuilt:
      if (k < 2 || n < k) throw ParameterError("k-tree profile needs 2 <= k <= n");
      inst = random_ktree(rng, nn, k);
      break;
    case RandomProfile::kBoundedDegree:
      if (n < 1 || k < 2) throw ParameterError("bounded-degree profile needs n >= 1 and k >= 2");
      inst = random_bounded_degree(rng, nn, k);
      break;
  }
  inst = relabel(std::move(inst), random_permutation(nn, rng));
  inst.meta = {{"seed", static_cast<std::int64_t>(seed)}, {"n", n}, {"k", k}};
  validate_instance(inst);
  return inst;
}

}  // namespace ipath
