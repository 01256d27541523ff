#include <algorithm>

#include "extract_common.hpp"
#include "ipath/errors.hpp"
#include "ipath/extractors.hpp"

namespace ipath {

namespace {

constexpr Vertex kFullScanLimit = 1000;
constexpr Vertex kSampleSize = 64;

// Start vertices for the eccentricity scan: all of them up to the limit,
// otherwise evenly spaced ids plus both ends of the witness.
std::vector<Vertex> scan_sources(Vertex n, std::span<const Vertex> ham) {
  std::vector<Vertex> src;
  if (n <= kFullScanLimit) {
    src.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) src[v] = v;
    return src;
  }
  for (Vertex i = 0; i < kSampleSize; ++i)
    src.push_back(static_cast<Vertex>(static_cast<std::int64_t>(i) * n / kSampleSize));
  if (!ham.empty()) {
    src.push_back(ham.front());
    src.push_back(ham.back());
  }
  std::sort(src.begin(), src.end());
  src.erase(std::unique(src.begin(), src.end()), src.end());
  return src;
}

VertexPath longest_eccentric_path(const Graph& g, std::span<const Vertex> ham) {
  if (!ham.empty()) require_hamiltonian_path(g, ham);
  VertexPath best;
  for (Vertex s : scan_sources(g.order(), ham)) {
    auto p = eccentric_shortest_path(g, s);
    if (p.size() > best.size()) best = std::move(p);
  }
  return best;
}

unsigned ceil_log2_int(std::size_t x) { return x <= 1 ? 0 : ceil_log2(BigInt(x)); }

}  // namespace

ExtractionCertificate run_base(const BaseExtractor& base, const Graph& g, const VertexPath& ham) {
  if (base.in_class && !base.in_class(g)) {
    throw ClassError("graph on " + std::to_string(g.order()) + " vertices is not in class " +
                     base.name);
  }
  auto cert = base.extract(g, ham);
  if (!is_induced_path(g, cert.path)) {
    throw InternalError("base extractor " + base.name + " returned a non-induced path");
  }
  const BoundParams declared{{"n", Rational(g.order())}, {"c", base.c}, {"d", base.d}};
  if (!bound_holds("polylog", declared, cert.order())) {
    throw InternalError("base extractor " + base.name + " missed its declared bound");
  }
  return cert;
}

ExtractionCertificate extract_bounded_degree(const Graph& g, std::span<const Vertex> ham) {
  const Vertex n = g.order();
  const auto delta = g.max_degree();
  if (n > 2 && delta <= 1) throw InputError("maximum degree at most one on more than two vertices");
  VertexPath best = longest_eccentric_path(g, ham);
  return detail::make_certificate(g, std::move(best), "bounded_degree",
                                  {{"n", Rational(n)}, {"delta", Rational(delta)}});
}

ExtractionCertificate extract_subpolynomial_degree(const Graph& g, std::span<const Vertex> ham,
                                                   const Rational& c, const Rational& d) {
  if (c <= 0 || d < 0 || d >= 1) throw ParameterError("need c > 0 and 0 <= d < 1");
  const Vertex n = g.order();
  const auto delta = g.max_degree();
  if (n > 2 && delta <= 1) throw InputError("maximum degree at most one on more than two vertices");
  // Hypothesis: log2(delta) <= c (log2 n)^d.
  if (delta >= 2 && n >= 2) {
    const auto lb = log2_bounds(BigInt(delta), 256);
    const auto cmp = compare_with_log_power(lb.hi, c, d, BigInt(n));
    if (!cmp.has_value() || *cmp > 0) {
      throw ClassError("maximum degree " + std::to_string(delta) +
                       " exceeds 2^(c (log n)^d)");
    }
  }
  VertexPath best = longest_eccentric_path(g, ham);
  return detail::make_certificate(g, std::move(best), "subpolynomial_degree",
                                  {{"n", Rational(n)}, {"c", c}, {"d", d}});
}

ExtractionCertificate extract_with_modulator(const Graph& g, const VertexPath& ham,
                                             std::span<const Vertex> x, const BaseExtractor& base) {
  require_hamiltonian_path(g, ham);
  if (x.empty()) throw ParameterError("modulator must be nonempty");
  VertexSet xs(x.begin(), x.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const auto segments = split_by_removal(g, ham, xs);
  if (segments.empty()) throw ParameterError("modulator covers the whole graph");
  const VertexPath& seg = segments.front();
  VertexSet members(seg.begin(), seg.end());
  std::sort(members.begin(), members.end());
  const Subgraph sub = induced_subgraph(g, members);
  VertexPath sub_ham;
  for (Vertex v : seg) sub_ham.push_back(sub.from_parent[v]);

  const auto inner = run_base(base, sub.graph, sub_ham);
  VertexPath path;
  for (Vertex v : inner.path) path.push_back(sub.to_parent[v]);
  BoundParams params = inner.params;
  params["n"] = Rational(g.order());
  params["x"] = Rational(xs.size());
  params["segment"] = Rational(seg.size());
  return detail::make_certificate(g, std::move(path), "modulator/" + inner.bound_kind,
                                  std::move(params));
}

BaseExtractor bounded_degree_base(int delta) {
  if (delta < 0) throw ParameterError("degree bound must be nonnegative");
  const unsigned D = std::max(1u, ceil_log2_int(static_cast<std::size_t>(delta)));
  BaseExtractor base;
  base.name = "bounded-degree(" + std::to_string(delta) + ")";
  base.c = std::min(Rational(1, 3), Rational(1, D));
  base.d = 1;
  base.in_class = [delta](const Graph& g) {
    return g.max_degree() <= static_cast<std::size_t>(delta);
  };
  base.extract = [](const Graph& g, const VertexPath& ham) {
    return extract_bounded_degree(g, ham);
  };
  return base;
}

namespace {

bool modulator_search(const Graph& g, int delta, int budget, std::vector<char>& removed,
                      VertexSet& chosen) {
  // First vertex whose remaining degree exceeds delta.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed[v]) continue;
    std::vector<Vertex> live;
    for (Vertex w : g.neighbors(v))
      if (!removed[w]) live.push_back(w);
    if (live.size() <= static_cast<std::size_t>(delta)) continue;
    if (budget == 0) return false;
    // Either v goes into X, or one of any delta + 1 of its neighbours does.
    std::vector<Vertex> branch{v};
    branch.insert(branch.end(), live.begin(), live.begin() + delta + 1);
    for (Vertex b : branch) {
      removed[b] = 1;
      chosen.push_back(b);
      if (modulator_search(g, delta, budget - 1, removed, chosen)) return true;
      chosen.pop_back();
      removed[b] = 0;
    }
    return false;
  }
  return true;
}

}  // namespace

std::optional<VertexSet> find_degree_modulator(const Graph& g, int k, int delta) {
  if (k < 0 || delta < 0) throw ParameterError("modulator size and degree must be nonnegative");
  for (int budget = 0; budget <= k; ++budget) {
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    VertexSet chosen;
    if (modulator_search(g, delta, budget, removed, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

BaseExtractor almost_bounded_degree_base(int k, int delta) {
  if (k < 0 || delta < 0) throw ParameterError("modulator size and degree must be nonnegative");
  const unsigned D = std::max(1u, ceil_log2_int(static_cast<std::size_t>(delta)));
  const unsigned B = ceil_log2_int(static_cast<std::size_t>(k) + 1) + 1;
  const Rational c = std::min({Rational(1, 3), Rational(1, 2 * D), Rational(1, B)});
  BaseExtractor base;
  base.name = "almost-bounded-degree(" + std::to_string(k) + "," + std::to_string(delta) + ")";
  base.c = c;
  base.d = 1;
  base.in_class = [k, delta](const Graph& g) {
    return find_degree_modulator(g, k, delta).has_value();
  };
  base.extract = [k, delta, c](const Graph& g, const VertexPath& ham) {
    const BoundParams params{{"n", Rational(g.order())}, {"c", c}, {"d", 1}};
    const auto x = find_degree_modulator(g, k, delta);
    if (!x) throw ClassError("no degree modulator of size at most " + std::to_string(k));
    VertexPath best = detail::ham_edge(ham);
    if (x->empty()) {
      auto cert = extract_bounded_degree(g, ham);
      if (cert.order() > best.size()) best = std::move(cert.path);
    } else if (x->size() < static_cast<std::size_t>(g.order())) {
      const auto inner = bounded_degree_base(delta);
      auto cert = extract_with_modulator(g, ham, *x, inner);
      if (cert.order() > best.size()) best = std::move(cert.path);
    }
    return detail::make_certificate(g, std::move(best), "polylog", params);
  };
  return base;
}

}  // namespace ipath
