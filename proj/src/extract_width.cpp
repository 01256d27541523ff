#include <numeric>

#include "extract_common.hpp"
#include "ipath/errors.hpp"
#include "ipath/extractors.hpp"

namespace ipath {

namespace {

int resolve_width_bound(const Representation& rep, std::optional<int> k) {
  const int w = rep.width();
  const int kk = k.value_or(std::max(w + 1, 1));
  if (kk < 1) throw ParameterError("width bound k must be at least 1");
  if (w >= kk) {
    throw ValidationError("representation has width " + std::to_string(w) +
                          ", not less than k = " + std::to_string(kk));
  }
  return kk;
}

void check_inputs(const Graph& g, const VertexPath& ham, const Representation& rep) {
  require_hamiltonian_path(g, ham);
  rep.validate(g);
}

// Least vertex whose model contains host node t.
Vertex least_in_bag(const Representation& rep, Node t) {
  const auto b = rep.bag(t);
  if (b.empty()) throw InternalError("empty end bag after trimming");
  return b.front();
}

}  // namespace

ExtractionCertificate extract_pathwidth(const Graph& g, const VertexPath& ham,
                                        const Representation& rep, std::optional<int> k) {
  check_inputs(g, ham, rep);
  if (rep.kind() != HostKind::kPath) throw ValidationError("pathwidth extractor needs a path host");
  const int k0 = resolve_width_bound(rep, k);
  const BoundParams params{{"n", Rational(g.order())}, {"k", Rational(k0)}};
  if (g.order() == 0) return detail::make_certificate(g, {}, "pathwidth", params);

  // Current subproblem: graph, Hamiltonian path, trimmed representation and
  // the map from its ids to the ids of g.
  Graph cur = g;
  VertexPath cur_ham = ham;
  std::vector<Vertex> to_orig(static_cast<std::size_t>(g.order()));
  std::iota(to_orig.begin(), to_orig.end(), 0);
  Representation cur_rep = restrict_to_vertices(rep, to_orig);
  int kk = k0;

  VertexPath best = detail::ham_edge(ham);
  auto offer = [&](const VertexPath& local) {
    if (local.size() <= best.size()) return;
    best.clear();
    for (Vertex v : local) best.push_back(to_orig[v]);
  };

  while (true) {
    const Vertex n = cur.order();
    if (n <= 2 || kk <= 2) {
      // Width at most one: a connected caterpillar with a Hamiltonian path is
      // itself a path.
      if (!is_induced_path(cur, cur_ham)) {
        throw InternalError("width-one subproblem is not an induced path");
      }
      offer(cur_ham);
      break;
    }
    const Vertex u = least_in_bag(cur_rep, 0);
    const Vertex v = least_in_bag(cur_rep, cur_rep.host_order() - 1);
    const VertexPath q = shortest_path(cur, u, v);
    offer(q);
    if (ipow(BigInt(3 * q.size()), static_cast<unsigned>(kk)) >= n) break;

    const auto segments = split_by_removal(cur, cur_ham, VertexSet(q.begin(), q.end()));
    if (segments.empty() || segments.front().empty()) break;
    const VertexPath& seg = segments.front();
    VertexSet keep(seg.begin(), seg.end());
    std::sort(keep.begin(), keep.end());
    Subgraph sub = induced_subgraph(cur, keep);
    Representation next_rep = restrict_to_vertices(cur_rep, sub.to_parent);
    if (next_rep.width() >= kk - 1) {
      throw InternalError("width did not drop after removing the boundary path");
    }
    VertexPath next_ham;
    next_ham.reserve(seg.size());
    for (Vertex x : seg) next_ham.push_back(sub.from_parent[x]);
    std::vector<Vertex> next_orig;
    next_orig.reserve(sub.to_parent.size());
    for (Vertex x : sub.to_parent) next_orig.push_back(to_orig[x]);

    cur = std::move(sub.graph);
    cur_ham = std::move(next_ham);
    cur_rep = std::move(next_rep);
    to_orig = std::move(next_orig);
    --kk;
  }
  return detail::make_certificate(g, std::move(best), "pathwidth", params);
}

PathContraction contract_to_path_rep(const Graph& g, const VertexPath& ham,
                                     const Representation& rep, std::span<const Node> p) {
  check_inputs(g, ham, rep);
  const std::size_t w = path_weight(rep, p);
  std::vector<char> on_path(static_cast<std::size_t>(rep.host_order()), 0);
  for (Node t : p) on_path[t] = 1;
  std::vector<char> keep(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Node t : rep.model(v)) {
      if (on_path[t]) {
        keep[v] = 1;
        break;
      }
    }
  }
  auto absorbed = detail::absorb_runs(g, ham, keep);
  Representation merged = contract_models(rep, absorbed.map);
  Representation clipped = restrict_to_path(merged, absorbed.graph, p);
  if (static_cast<std::size_t>(absorbed.graph.order()) != w) {
    throw InternalError("contracted graph order differs from the path weight");
  }
  if (clipped.width() > rep.width()) throw InternalError("contraction increased the width");
  return {std::move(absorbed.graph), std::move(absorbed.map), std::move(clipped),
          std::move(absorbed.ham)};
}

ExtractionCertificate extract_treewidth(const Graph& g, const VertexPath& ham,
                                        const Representation& rep, std::optional<int> k) {
  check_inputs(g, ham, rep);
  if (rep.kind() == HostKind::kCycle) throw ValidationError("treewidth extractor needs a tree host");
  const int kk = resolve_width_bound(rep, k);
  const BoundParams params{{"n", Rational(g.order())}, {"k", Rational(kk)}};
  if (g.order() <= kk) {
    VertexSet all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    const std::vector<VertexSet> bags{all};
    const auto single = from_bags(HostKind::kPath, 1, {}, bags, g);
    auto cert = extract_pathwidth(g, ham, single, kk);
    return detail::make_certificate(g, std::move(cert.path), "treewidth", params);
  }
  const auto varied = make_varied(rep, g).rep;
  const auto heavy = max_weight_path(varied);
  const auto pc = contract_to_path_rep(g, ham, varied, heavy.path);
  const auto inner = extract_pathwidth(pc.graph, pc.ham, pc.rep, kk);
  VertexPath lifted = lift_induced_path(g, pc.map, inner.path);
  return detail::make_certificate(g, std::move(lifted), "treewidth", params);
}

}  // namespace ipath
