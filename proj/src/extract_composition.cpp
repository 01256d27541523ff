#include <algorithm>
#include <set>

#include "extract_common.hpp"
#include "ipath/errors.hpp"
#include "ipath/extractors.hpp"

namespace ipath {

namespace {

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Z_r for every node of a varied path representation: the least private
// vertex of the bag together with the adjacent adhesion sets, or the whole
// bag when nothing is private.
std::vector<VertexSet> reduced_bags(const Representation& rep) {
  const Node l = rep.host_order();
  std::vector<VertexSet> z(static_cast<std::size_t>(l));
  for (Node r = 0; r < l; ++r) {
    VertexSet adh;
    VertexSet neighbours;
    for (Node s : {r - 1, r + 1}) {
      if (s < 0 || s >= l) continue;
      adh = set_union(adh, adhesion_set(rep, r, s));
      neighbours = set_union(neighbours, rep.bag(s));
    }
    const VertexSet priv = set_difference(rep.bag(r), neighbours);
    if (priv.empty()) {
      const auto b = rep.bag(r);
      z[r].assign(b.begin(), b.end());
    } else {
      z[r] = set_union(adh, VertexSet{priv.front()});
    }
  }
  return z;
}

int resolve_adhesion_bound(const Representation& rep, std::optional<int> a) {
  const int aa = a.value_or(std::max(2, rep.adhesion() + 1));
  if (aa < 2) throw ParameterError("adhesion bound a must be at least 2");
  if (rep.adhesion() >= aa) {
    throw ValidationError("representation has adhesion " + std::to_string(rep.adhesion()) +
                          ", not less than a = " + std::to_string(aa));
  }
  return aa;
}

}  // namespace

ExtractionCertificate extract_adhesion_pathrep(const Graph& g, const VertexPath& ham,
                                               const Representation& rep, std::optional<int> a) {
  require_hamiltonian_path(g, ham);
  rep.validate(g);
  if (rep.kind() != HostKind::kPath) throw ValidationError("adhesion extractor needs a path host");
  if (!rep.varied()) throw ValidationError("path representation is not varied");
  const int aa = resolve_adhesion_bound(rep, a);
  const BoundParams params{{"ell", Rational(rep.host_order())}, {"a", Rational(aa)}};
  if (g.order() <= 2) return detail::make_certificate(g, ham, "adhesion_pathrep", params);

  const auto z = reduced_bags(rep);
  std::vector<char> keep(static_cast<std::size_t>(g.order()), 0);
  for (const auto& zr : z)
    for (Vertex v : zr) keep[v] = 1;
  const auto absorbed = detail::absorb_runs(g, ham, keep);
  const Representation merged = contract_models(rep, absorbed.map);

  const auto compact = absorbed.map.id_to_compact();
  for (Node r = 0; r < rep.host_order(); ++r) {
    VertexSet expected;
    for (Vertex v : z[r]) expected.push_back(compact[v]);
    std::sort(expected.begin(), expected.end());
    const auto got = merged.bag(r);
    if (!std::equal(expected.begin(), expected.end(), got.begin(), got.end())) {
      throw InternalError("bag " + std::to_string(r) + " differs from its reduced bag");
    }
  }
  if (merged.width() > 2 * aa - 1 || !merged.varied()) {
    throw InternalError("reduced representation has width " + std::to_string(merged.width()) +
                        (merged.varied() ? "" : " and is not varied"));
  }
  const auto inner = extract_pathwidth(absorbed.graph, absorbed.ham, merged, 2 * aa);
  VertexPath lifted = lift_induced_path(g, absorbed.map, inner.path);
  return detail::make_certificate(g, std::move(lifted), "adhesion_pathrep", params);
}

ExtractionCertificate extract_tree_composition(const Graph& g, const VertexPath& ham,
                                               const Representation& rep,
                                               const BaseExtractor& base, std::optional<int> a,
                                               CompositionBranch branch) {
  require_hamiltonian_path(g, ham);
  rep.validate(g);
  if (rep.kind() == HostKind::kCycle) throw ValidationError("tree composition needs a tree host");
  if (base.c <= 0 || base.c > Rational(1, 3) || base.d <= 0 || base.d > 1) {
    throw ParameterError("base extractor constants must satisfy 0 < c <= 1/3, 0 < d <= 1");
  }
  const Representation varied = make_varied(rep, g).rep;
  const int aa = resolve_adhesion_bound(varied, a);
  const Rational ad = aa * base.d;
  const Rational exponent = base.d / (4 * ad + 1);
  const Rational eps = 4 * ad / (4 * ad + 1);
  const Vertex n = g.order();
  const BoundParams params{{"n", Rational(n)}, {"a", Rational(aa)}, {"c", base.c}, {"d", base.d}};

  for (Node t = 0; t < varied.host_order(); ++t) {
    if (base.in_class && !base.in_class(torso(varied, g, t).graph)) {
      throw ClassError("torso at node " + std::to_string(t) + " is not in class " + base.name);
    }
  }

  if (n <= 2) return detail::make_certificate(g, ham, "tree_composition", params);
  const auto trivial = compare_with_log_power(Rational(2), base.c, exponent, BigInt(n));
  if (branch == CompositionBranch::kAuto && trivial.has_value() && *trivial >= 0) {
    return detail::make_certificate(g, detail::ham_edge(ham), "tree_composition", params);
  }

  // Big-bag branch: the largest bag, if it reaches n^(1 / (log n)^eps).
  Node big = 0;
  for (Node t = 1; t < varied.host_order(); ++t)
    if (varied.bag(t).size() > varied.bag(big).size()) big = t;
  const auto big_bag = varied.bag(big);
  const bool take_big =
      branch == CompositionBranch::kBigBag ||
      (branch == CompositionBranch::kAuto &&
       at_least_log_threshold(BigInt(big_bag.size()), BigInt(n), eps));
  if (take_big) {
    std::vector<char> keep(static_cast<std::size_t>(n), 0);
    for (Vertex v : big_bag) keep[v] = 1;
    const auto absorbed = detail::absorb_runs(g, ham, keep);
    const Subgraph tor = torso(varied, g, big);
    // Compact ids of the kept vertices follow bag order, as do torso ids.
    for (auto [x, y] : absorbed.graph.edges()) {
      if (!tor.graph.adjacent(x, y)) {
        throw InternalError("contracted graph is not a subgraph of the torso at node " +
                            std::to_string(big));
      }
    }
    const auto inner = run_base(base, absorbed.graph, absorbed.ham);
    VertexPath lifted = lift_induced_path(g, absorbed.map, inner.path);
    return detail::make_certificate(g, std::move(lifted), "tree_composition", params);
  }

  // Long-path branch.
  const NodePath host_path = longest_host_path(varied);
  std::vector<char> keep(static_cast<std::size_t>(n), 0);
  for (Node t : host_path)
    for (Vertex v : varied.bag(t)) keep[v] = 1;
  const auto absorbed = detail::absorb_runs(g, ham, keep);
  const Representation merged = contract_models(varied, absorbed.map);
  Representation path_rep = restrict_to_path(merged, absorbed.graph, host_path);
  if (!path_rep.varied()) {
    throw InternalError("path representation along the longest host path is not varied");
  }
  const auto inner = extract_adhesion_pathrep(absorbed.graph, absorbed.ham, path_rep, aa);
  VertexPath lifted = lift_induced_path(g, absorbed.map, inner.path);
  return detail::make_certificate(g, std::move(lifted), "tree_composition", params);
}

BigInt vortex_min_cycle(Vertex n, int k) {
  return BigInt(k + 1) * (BigInt(n < 1 ? 0 : ceil_log2(BigInt(n))) + 1);
}

ExtractionCertificate extract_from_vortex(const Graph& g, const VertexPath& ham,
                                          const Representation& vortex, std::optional<int> k) {
  require_hamiltonian_path(g, ham);
  vortex.validate(g);
  if (vortex.kind() != HostKind::kCycle) throw ValidationError("vortex needs a cycle host");
  const auto anchors = vortex.anchors();
  if (anchors.empty()) throw ValidationError("vortex needs one anchor vertex per cycle node");
  const Node m = vortex.host_order();
  for (Node t = 0; t < m; ++t) {
    if (!g.adjacent(anchors[t], anchors[(t + 1) % m])) {
      throw ValidationError("anchors of nodes " + std::to_string(t) + " and " +
                            std::to_string((t + 1) % m) + " are not adjacent");
    }
  }
  const int w = vortex.width();
  const int kk = k.value_or(std::max(w + 1, 1));
  if (w >= kk) {
    throw ValidationError("vortex has width " + std::to_string(w) + ", not less than k = " +
                          std::to_string(kk));
  }
  if (BigInt(m) < vortex_min_cycle(g.order(), kk)) {
    throw ParameterError("cycle of order " + std::to_string(m) + " is shorter than " +
                         vortex_min_cycle(g.order(), kk).str());
  }
  const BoundParams params{{"n", Rational(g.order())}, {"k", Rational(kk)}};

  // Cut the cycle at node 0: drop every anchor whose model contains it and
  // keep the longest remaining arc.
  std::vector<char> cut(static_cast<std::size_t>(m), 0);
  for (Node t = 0; t < m; ++t) {
    const auto mod = vortex.model(anchors[t]);
    cut[t] = std::binary_search(mod.begin(), mod.end(), 0) ? 1 : 0;
  }
  Node best_start = -1;
  Node best_len = 0;
  for (Node t = 1; t < m;) {
    if (cut[t]) {
      ++t;
      continue;
    }
    Node e = t;
    while (e < m && !cut[e]) ++e;
    if (e - t > best_len) {
      best_len = e - t;
      best_start = t;
    }
    t = e;
  }
  if (best_start < 0) throw InternalError("cycle has no arc avoiding the cut");

  VertexPath arc;
  for (Node t = best_start; t < best_start + best_len; ++t) arc.push_back(anchors[t]);
  VertexSet members = arc;
  std::sort(members.begin(), members.end());
  const Subgraph sub = induced_subgraph(g, members);
  VertexPath sub_ham;
  for (Vertex v : arc) sub_ham.push_back(sub.from_parent[v]);
  // Path host on nodes 1..m-1 of the cycle, renumbered from 0.
  std::vector<NodeSet> models;
  for (Vertex v : sub.to_parent) {
    NodeSet mod;
    for (Node t : vortex.model(v)) {
      if (t == 0) throw InternalError("arc vertex meets the cut node");
      mod.push_back(t - 1);
    }
    models.push_back(std::move(mod));
  }
  std::vector<NodeEdge> edges;
  for (Node i = 0; i + 1 < m - 1; ++i) edges.emplace_back(i, i + 1);
  const auto path_rep =
      Representation::from_models(HostKind::kPath, m - 1, edges, std::move(models));
  const auto inner = extract_pathwidth(sub.graph, sub_ham, path_rep, kk);
  VertexPath path;
  for (Vertex v : inner.path) path.push_back(sub.to_parent[v]);
  return detail::make_certificate(g, std::move(path), "vortex", params);
}

ExtractionCertificate extract_master(const Graph& g, const VertexPath& ham,
                                     const Representation& rep,
                                     const std::map<Node, TorsoKind>& torso_kinds,
                                     const std::optional<BaseExtractor>& embeddable_plugin) {
  int k = 0;
  int delta = 0;
  bool any_embeddable = false;
  for (Node t = 0; t < rep.host_order(); ++t) {
    const auto it = torso_kinds.find(t);
    if (it == torso_kinds.end()) {
      throw InputError("no torso kind given for node " + std::to_string(t));
    }
    if (it->second.kind == TorsoKind::Kind::kAlmostEmbeddable) {
      if (!embeddable_plugin) {
        throw UnsupportedError("torso at node " + std::to_string(t) +
                               " is almost embeddable and no extractor is available for it");
      }
      any_embeddable = true;
    } else {
      k = std::max(k, it->second.k);
      delta = std::max(delta, it->second.delta);
    }
  }
  BaseExtractor degree = almost_bounded_degree_base(k, delta);
  BaseExtractor base = degree;
  if (any_embeddable) {
    const BaseExtractor plugin = *embeddable_plugin;
    base.name = degree.name + "|" + plugin.name;
    base.c = std::min(degree.c, plugin.c);
    base.d = std::min(degree.d, plugin.d);
    base.in_class = [degree, plugin](const Graph& h) {
      return degree.in_class(h) || !plugin.in_class || plugin.in_class(h);
    };
    base.extract = [degree, plugin](const Graph& h, const VertexPath& p) {
      return degree.in_class(h) ? degree.extract(h, p) : plugin.extract(h, p);
    };
  }
  return extract_tree_composition(g, ham, rep, base, std::max(2, rep.adhesion() + 1));
}

}  // namespace ipath
