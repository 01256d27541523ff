#include "ipath/oracle.hpp"

#include <bit>
#include <chrono>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

using Bits = std::uint64_t;

Bits bit(Vertex v) { return Bits{1} << v; }

int lowest(Bits b) { return std::countr_zero(b); }

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
  return adj;
}

void check_cap(const Graph& g, const OracleLimits& limits, Vertex hard_cap) {
  if (limits.cap > hard_cap) {
    throw ParameterError("oracle cap " + std::to_string(limits.cap) + " above the maximum " +
                         std::to_string(hard_cap));
  }
  if (g.order() > limits.cap) {
    throw CapExceededError("graph has " + std::to_string(g.order()) +
                           " vertices, above the oracle cap of " + std::to_string(limits.cap));
  }
}

class Deadline {
 public:
  explicit Deadline(std::int64_t ms)
      : enabled_(ms > 0),
        end_(std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)) {}

  // Polls the clock every 4096 calls.
  bool expired() {
    if (!enabled_ || hit_) return hit_;
    if ((++calls_ & 0xfff) == 0 && std::chrono::steady_clock::now() >= end_) hit_ = true;
    return hit_;
  }
  bool hit() const { return hit_; }

 private:
  bool enabled_;
  bool hit_ = false;
  std::uint64_t calls_ = 0;
  std::chrono::steady_clock::time_point end_;
};

class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, std::int64_t time_limit_ms)
      : adj_(adjacency_bits(g)), n_(g.order()), deadline_(time_limit_ms) {}

  OracleResult run() {
    OracleResult r;
    if (n_ == 0) return r;
    best_ = {0};
    for (Vertex s = 0; s < n_ && !deadline_.hit(); ++s) {
      start_ = s;
      path_ = {s};
      extend(0, adj_[s] | bit(s));
    }
    r.value = static_cast<std::int64_t>(best_.size());
    r.witness = best_;
    r.nodes_explored = nodes_;
    r.time_limit_hit = deadline_.hit();
    return r;
  }

 private:
  // blocked: closed neighbourhoods of all path vertices but the last;
  // closed_last: closed neighbourhood of the last one.
  void extend(Bits blocked, Bits closed_last) {
    ++nodes_;
    if (deadline_.expired()) return;
    const Vertex last = path_.back();
    // Record only paths whose end is not before their start: the reversal
    // of any other path is found from its smaller end.
    if (path_.size() > best_.size() && last >= start_) best_ = path_;

    const Bits used = blocked | closed_last;
    // Earlier path vertices lie in blocked, so this also excludes them.
    Bits cand = adj_[last] & ~blocked;
    if (!cand) return;
    // Upper bound: the path plus every vertex still reachable through
    // unblocked vertices.
    Bits reach = cand;
    Bits frontier = cand;
    while (frontier) {
      Bits next = 0;
      for (Bits f = frontier; f; f &= f - 1) next |= adj_[lowest(f)];
      next &= ~used & ~reach;
      reach |= next;
      frontier = next;
    }
    if (path_.size() + static_cast<std::size_t>(std::popcount(reach)) <= best_.size()) return;

    for (Bits c = cand; c; c &= c - 1) {
      const Vertex w = lowest(c);
      path_.push_back(w);
      extend(blocked | closed_last, adj_[w] | bit(w));
      path_.pop_back();
      if (deadline_.hit()) return;
    }
  }

  std::vector<Bits> adj_;
  Vertex n_;
  Deadline deadline_;
  Vertex start_ = 0;
  VertexPath path_;
  VertexPath best_;
  std::uint64_t nodes_ = 0;
};

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::int64_t time_limit_ms)
      : adj_(adjacency_bits(g)), n_(g.order()), deadline_(time_limit_ms) {}

  OracleResult run() {
    OracleResult r;
    const Bits all = n_ == 64 ? ~Bits{0} : bit(n_) - 1;
    expand(0, all);
    r.value = std::popcount(best_);
    for (Bits b = best_; b; b &= b - 1) r.witness.push_back(lowest(b));
    r.nodes_explored = nodes_;
    r.time_limit_hit = deadline_.hit();
    return r;
  }

 private:
  // Greedy colouring of cand in ascending id order; colour classes give an
  // upper bound on any clique extending current.
  void expand(Bits current, Bits cand) {
    ++nodes_;
    if (deadline_.expired()) return;
    if (!cand) {
      if (std::popcount(current) > std::popcount(best_)) best_ = current;
      return;
    }
    std::vector<Vertex> order;
    std::vector<int> colour;
    Bits uncoloured = cand;
    int c = 0;
    while (uncoloured) {
      ++c;
      Bits q = uncoloured;
      while (q) {
        const Vertex v = lowest(q);
        q &= ~bit(v) & ~adj_[v];
        uncoloured &= ~bit(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    const int size = std::popcount(current);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= std::popcount(best_)) return;
      const Vertex v = order[i];
      expand(current | bit(v), cand & adj_[v]);
      cand &= ~bit(v);
      if (deadline_.hit()) return;
    }
  }

  std::vector<Bits> adj_;
  Vertex n_;
  Deadline deadline_;
  Bits best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult longest_induced_path(const Graph& g, OracleLimits limits) {
  check_cap(g, limits, kOracleHardCap);
  auto r = InducedPathSearch(g, limits.time_limit_ms).run();
  if (!is_induced_path(g, r.witness)) throw InternalError("oracle witness is not induced");
  return r;
}

OracleResult max_clique(const Graph& g, OracleLimits limits) {
  check_cap(g, limits, kOracleHardCap);
  auto r = CliqueSearch(g, limits.time_limit_ms).run();
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    for (std::size_t j = i + 1; j < r.witness.size(); ++j)
      if (!g.adjacent(r.witness[i], r.witness[j])) throw InternalError("oracle clique is not a clique");
  return r;
}

OracleResult hamiltonian_path(const Graph& g, OracleLimits limits) {
  check_cap(g, limits, kHamiltonianHardCap);
  const Vertex n = g.order();
  OracleResult r;
  if (n == 0) return r;
  const auto adj = adjacency_bits(g);
  const std::size_t full = (std::size_t{1} << n) - 1;
  // ends[mask]: vertices v such that some path covers exactly mask and ends at v.
  std::vector<std::uint32_t> ends(full + 1, 0);
  for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
  Deadline deadline(limits.time_limit_ms);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (deadline.expired()) break;
    const std::uint32_t e = ends[mask];
    if (!e) continue;
    ++r.nodes_explored;
    for (std::uint32_t b = e; b; b &= b - 1) {
      const Vertex v = std::countr_zero(b);
      for (Bits w = adj[v] & ~static_cast<Bits>(mask); w; w &= w - 1) {
        const Vertex x = lowest(w);
        ends[mask | (std::size_t{1} << x)] |= 1u << x;
      }
    }
  }
  r.time_limit_hit = deadline.hit();
  if (r.time_limit_hit || !ends[full]) return r;

  std::size_t mask = full;
  Vertex v = std::countr_zero(ends[full]);
  VertexPath rev{v};
  while (mask != (std::size_t{1} << v)) {
    const std::size_t prev = mask & ~(std::size_t{1} << v);
    Vertex u = -1;
    for (std::uint32_t b = ends[prev] & static_cast<std::uint32_t>(adj[v]); b; b &= b - 1) {
      u = std::countr_zero(b);
      break;
    }
    if (u < 0) throw InternalError("Hamiltonian path reconstruction failed");
    rev.push_back(u);
    mask = prev;
    v = u;
  }
  r.witness.assign(rev.rbegin(), rev.rend());
  r.value = 1;
  if (!is_hamiltonian_path(g, r.witness)) throw InternalError("oracle Hamiltonian path is invalid");
  return r;
}

Verdict verify_certificate(const Graph& g, const ExtractionCertificate& cert) {
  for (Vertex v : cert.path)
    if (!g.contains(v)) return {false, "not induced"};
  if (!is_induced_path(g, cert.path)) return {false, "not induced"};
  try {
    if (!bound_holds(cert.bound_kind, cert.params, cert.order())) return {false, "bound"};
  } catch (const InputError&) {
    return {false, "bound"};
  }
  return {true, ""};
}

}  // namespace ipath
