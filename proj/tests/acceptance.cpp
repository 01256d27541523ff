// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Bounds are checked here with exact integers and the naive oracle
// from support.hpp, not with the library's own bound checker.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "ipath/exact.hpp"
#include "ipath/extractors.hpp"
#include "ipath/generators.hpp"
#include "ipath/io.hpp"
#include "ipath/oracle.hpp"
#include "support.hpp"

namespace {

using namespace ipath;
using ipath::testing::naive_induced;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

BigInt big_pow(std::int64_t base, std::int64_t exp) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Smallest m with 2^m >= n.
std::int64_t log2_ceil(std::int64_t n) {
  std::int64_t m = 0;
  while ((std::int64_t{1} << m) < n) ++m;
  return m;
}

std::string label(const GeneratedInstance& inst) {
  std::string s = inst.family;
  for (const auto& [k, v] : inst.meta) s += " " + k + "=" + std::to_string(v);
  return s + " n=" + std::to_string(inst.graph.order());
}

// Certificates on small inputs, kept for the oracle comparison.
struct Small {
  std::string what;
  Graph graph;
  std::size_t order;
};
std::vector<Small> small_corpus;

void check_path(const std::string& what, const Graph& g, const ExtractionCertificate& cert) {
  require(cert.verified, what + ": certificate not marked verified");
  require(naive_induced(g, cert.path), what + ": path is not induced");
  if (g.order() <= 22) small_corpus.push_back({what, g, cert.order()});
}

struct Outcome {
  std::size_t instances = 0;
  std::string note;
};

using clock_type = std::chrono::steady_clock;

Outcome pathwidth_suite() {
  std::vector<GeneratedInstance> corpus;
  for (std::int64_t n : {10, 50, 200, 500, 1000, 2000})
    for (std::int64_t k = 1; k <= 5; ++k) corpus.push_back(gen_path_power(n, k));
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::int64_t n = k; n <= 2000; n += 1 + n / 16) {
      auto inst = gen_worstcase_interval(n, k);
      if (inst.graph.order() <= 2000) corpus.push_back(std::move(inst));
    }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto n = 20 + static_cast<std::int64_t>(seed) * 6;
    corpus.push_back(gen_random_validated(seed, RandomProfile::kInterval, n, 2 + static_cast<std::int64_t>(seed % 5)));
  }
  for (const auto& inst : corpus) {
    const auto what = label(inst);
    const int k = inst.rep->width() + 1;
    require(k <= 6 && inst.graph.order() <= 2000, what + ": outside the parameter range");
    const auto cert = extract_pathwidth(inst.graph, inst.ham, *inst.rep, k);
    check_path(what, inst.graph, cert);
    const auto l = static_cast<std::int64_t>(cert.order());
    require(big_pow(3 * l, k) >= inst.graph.order(),
            what + ": (3L)^k < n with L=" + std::to_string(l) + " k=" + std::to_string(k));
  }
  require(corpus.size() >= 500, "fewer than 500 instances");
  return {corpus.size(), ""};
}

Outcome worstcase_suite() {
  std::size_t count = 0;
  std::int64_t l_15_3 = -1;
  for (std::int64_t k = 3; k <= 5; ++k) {
    for (std::int64_t n = k; n <= 200; ++n) {
      const auto inst = gen_worstcase_interval(n, k);
      if (inst.graph.order() > 32) continue;
      const auto what = label(inst);
      require(testing::naive_clique_number(inst.graph) <= static_cast<std::size_t>(k), what + ": clique number exceeds k");
      const auto lib = longest_induced_path(inst.graph);
      const auto l = static_cast<std::int64_t>(testing::naive_longest_induced_path(inst.graph));
      require(lib.value == l, what + ": library oracle disagrees with the naive oracle");
      require(big_pow(l - 1, k) <= BigInt(n) * n,
              what + ": (L*-1)^k > n^2 with L*=" + std::to_string(l));
      if (k == 3 && n == 15) l_15_3 = l;
      const auto cert = extract_pathwidth(inst.graph, inst.ham, *inst.rep);
      check_path(what, inst.graph, cert);
      ++count;
    }
  }
  require(l_15_3 == 7, "k=3 n=15 optimum is " + std::to_string(l_15_3) + ", expected 7");
  return {count, "L*(15,3)=7"};
}

Outcome treewidth_suite() {
  std::size_t count = 0;
  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    const std::int64_t tw = 1 + static_cast<std::int64_t>(seed % 4);
    const std::int64_t n = 10 + static_cast<std::int64_t>(seed) * 2;
    const auto inst = gen_random_validated(seed, RandomProfile::kKtreePathBuilt, n, tw + 1);
    const auto what = label(inst);
    require(inst.rep->width() <= tw, what + ": width above k");
    const auto cert = extract_treewidth(inst.graph, inst.ham, *inst.rep);
    check_path(what, inst.graph, cert);
    const auto l = static_cast<std::int64_t>(cert.order());
    require(big_pow(4 * l, tw) >= log2_ceil(n), what + ": 2^((4L)^k) < n with L=" + std::to_string(l));
    ++count;
  }
  for (int i = 1; i <= 6; ++i) {
    const auto inst = gen_outerplanar_family(i);
    const auto cert = extract_treewidth(inst.graph, inst.ham, *inst.rep);
    check_path(label(inst), inst.graph, cert);
  }
  require(count >= 200, "fewer than 200 k-trees");
  return {count, ""};
}

std::vector<GeneratedInstance> fuzz_reps() {
  std::vector<GeneratedInstance> out;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto n = 5 + static_cast<std::int64_t>(seed % 60);
    const auto k = 2 + static_cast<std::int64_t>(seed % 5);
    out.push_back(gen_random_validated(seed, RandomProfile::kInterval, n, k));
    if (n >= k) out.push_back(gen_random_validated(seed, RandomProfile::kKtreePathBuilt, n, k));
  }
  for (std::int64_t n = 5; n <= 60; n += 5) out.push_back(gen_worstcase_interval(n, 3));
  for (int i = 1; i <= 5; ++i) out.push_back(gen_outerplanar_family(i));
  for (std::int64_t q = 1; q <= 10; ++q) out.push_back(gen_chained_cliques(q, 4));
  return out;
}

Outcome weight_suite() {
  std::size_t nodes = 0;
  const auto corpus = fuzz_reps();
  for (const auto& inst : corpus) {
    const auto varied = make_varied(*inst.rep, inst.graph).rep;
    for (const Representation* rep : {&*inst.rep, &varied}) {
      const std::int64_t k = rep->width() + 1;
      for (Node x = 0; x < rep->host_order(); ++x) {
        const auto w = static_cast<std::int64_t>(node_weight(*rep, x));
        require(BigInt(inst.graph.order()) <= big_pow(k + 1, w + 1) - 1,
                label(inst) + ": weight lemma fails at node " + std::to_string(x));
        ++nodes;
      }
    }
  }
  return {corpus.size(), std::to_string(nodes) + " host nodes"};
}

std::vector<NodeEdge> path_host(Node m) {
  std::vector<NodeEdge> e;
  for (Node t = 0; t + 1 < m; ++t) e.emplace_back(t, t + 1);
  return e;
}

// Path representation with repeated bags and spliced-in sub-bags: between
// consecutive bags B and B' a bag holding B ∩ B' plus random extra vertices
// of B is inserted, which keeps every model connected.
Representation inflate(const Representation& rep, const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexSet> bags;
  for (Node t = 0; t < rep.host_order(); ++t) {
    const auto b = rep.bag(t);
    const int copies = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int c = 0; c < copies; ++c) bags.emplace_back(b.begin(), b.end());
    if (t + 1 < rep.host_order() && rng() % 2) {
      const auto next = rep.bag(t + 1);
      VertexSet sub;
      for (Vertex v : b)
        if (std::binary_search(next.begin(), next.end(), v) || rng() % 2) sub.push_back(v);
      if (!sub.empty()) bags.push_back(sub);
    }
  }
  const auto m = static_cast<Node>(bags.size());
  return from_bags(HostKind::kPath, m, path_host(m), bags, g);
}

Outcome varied_suite() {
  std::mt19937_64 rng(5);
  std::size_t count = 0;
  for (std::uint64_t seed = 0; seed < 520; ++seed) {
    const auto n = 2 + static_cast<std::int64_t>(seed % 80);
    const auto inst = gen_random_validated(seed, RandomProfile::kInterval, n, 2 + static_cast<std::int64_t>(seed % 5));
    const auto rep = inflate(*inst.rep, inst.graph, rng);
    rep.validate(inst.graph);
    const auto varied = make_varied(rep, inst.graph).rep;
    varied.validate(inst.graph);
    require(varied.varied(), label(inst) + ": result is not varied");
    require(varied.host_order() <= inst.graph.order(),
            label(inst) + ": varied host has " + std::to_string(varied.host_order()) + " nodes");
    ++count;
  }
  return {count, ""};
}

Graph cycle_graph(Vertex n) { return Graph::cycle(n); }

Outcome degree_suite() {
  struct Item {
    std::string what;
    Graph g;
    VertexPath ham;
  };
  std::vector<Item> items;
  for (Vertex n : {3, 4, 5, 10, 17, 100, 999, 2048, 5000})
    items.push_back({"cycle n=" + std::to_string(n), cycle_graph(n), testing::identity_path(n)});
  for (int d = 1; d <= 12; ++d)
    items.push_back({"cube d=" + std::to_string(d), testing::hypercube(d), testing::gray_code(d)});
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto n = 10 + static_cast<std::int64_t>(seed) * 125;
    auto inst = gen_random_validated(seed, RandomProfile::kBoundedDegree, n, 3 + static_cast<std::int64_t>(seed % 4));
    items.push_back({label(inst), std::move(inst.graph), std::move(inst.ham)});
  }
  for (const auto& item : items) {
    const auto n = item.g.order();
    const auto delta = static_cast<std::int64_t>(item.g.max_degree());
    const auto cert = extract_bounded_degree(item.g, item.ham);
    check_path(item.what, item.g, cert);
    const auto l = static_cast<std::int64_t>(cert.order());
    if (n <= 2) {
      require(l >= n, item.what + ": L < n");
    } else {
      require(big_pow(delta, l) >= n, item.what + ": Delta^L < n with L=" + std::to_string(l));
    }
  }
  return {items.size(), ""};
}

std::vector<VertexSet> reduced_bags(const Representation& rep) {
  const Node l = rep.host_order();
  std::vector<VertexSet> z(static_cast<std::size_t>(l));
  for (Node r = 0; r < l; ++r) {
    const auto b = rep.bag(r);
    std::set<Vertex> adh, other;
    for (Node s : {r - 1, r + 1}) {
      if (s < 0 || s >= l) continue;
      for (Vertex v : rep.bag(s)) {
        other.insert(v);
        if (std::binary_search(b.begin(), b.end(), v)) adh.insert(v);
      }
    }
    std::optional<Vertex> priv;
    for (Vertex v : b)
      if (!other.count(v)) {
        priv = v;
        break;
      }
    if (!priv) {
      z[r].assign(b.begin(), b.end());
    } else {
      adh.insert(*priv);
      z[r].assign(adh.begin(), adh.end());
    }
  }
  return z;
}

Outcome adhesion_suite() {
  std::size_t count = 0;
  for (std::int64_t q = 1; q <= 64; ++q) {
    for (std::int64_t s = 2; s <= 5; ++s) {
      const auto inst = gen_chained_cliques(q, s);
      const auto what = label(inst);
      const auto rep = make_varied(*inst.rep, inst.graph).rep;
      const std::int64_t a = std::max(2, rep.adhesion() + 1);
      std::size_t biggest = 0;
      for (const auto& z : reduced_bags(rep)) biggest = std::max(biggest, z.size());
      require(static_cast<std::int64_t>(biggest) - 1 <= 2 * a - 1, what + ": intermediate width above 2a-1");
      const auto cert = extract_adhesion_pathrep(inst.graph, inst.ham, rep);
      check_path(what, inst.graph, cert);
      const auto l = static_cast<std::int64_t>(cert.order());
      require(big_pow(3 * l, 2 * a) >= rep.host_order(),
              what + ": (3L)^(2a) < ell with L=" + std::to_string(l));
      ++count;
    }
  }
  return {count, ""};
}

Outcome oracle_suite() {
  // Extra small instances for the suites that do not run elsewhere here.
  for (std::int64_t q = 1; q <= 7; ++q) {
    const auto inst = gen_chained_cliques(q, 3);
    const auto cert = extract_tree_composition(inst.graph, inst.ham, *inst.rep, almost_bounded_degree_base(0, 2),
                                               std::nullopt, CompositionBranch::kLongPath);
    check_path(label(inst) + " long-path", inst.graph, cert);
    std::map<Node, TorsoKind> kinds;
    for (Node t = 0; t < inst.rep->host_order(); ++t)
      kinds[t] = {TorsoKind::Kind::kAlmostBoundedDegree, 0,
                  static_cast<int>(torso(*inst.rep, inst.graph, t).graph.max_degree())};
    const auto master = extract_master(inst.graph, inst.ham, *inst.rep, kinds);
    check_path(label(inst) + " master", inst.graph, master);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = gen_random_validated(seed, RandomProfile::kBoundedDegree, 22, 3);
    const auto x = find_degree_modulator(inst.graph, 2, 2);
    if (!x) continue;
    const auto cert = extract_with_modulator(inst.graph, inst.ham, *x, bounded_degree_base(2));
    check_path(label(inst) + " modulator", inst.graph, cert);
  }
  std::size_t count = 0;
  for (const auto& s : small_corpus) {
    const auto best = testing::naive_longest_induced_path(s.graph);
    require(s.order <= best, s.what + ": certificate order " + std::to_string(s.order) +
                                 " exceeds the optimum " + std::to_string(best));
    ++count;
  }
  require(count > 0, "no small instances collected");
  return {count, ""};
}

Outcome lift_suite() {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = std::uniform_int_distribution<Vertex>(2, 40)(rng);
    const auto orig = testing::random_connected(rng, n, std::uniform_int_distribution<int>(0, 2 * n)(rng));
    Graph g = orig;
    ContractionMap m(n);
    const int steps = std::uniform_int_distribution<int>(0, n - 1)(rng);
    for (int step = 0; step < steps; ++step) {
      const auto edges = g.edges();
      if (edges.empty()) break;
      const auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      std::tie(g, m) = contract_path_edge(g, m, u, v);
    }
    require(m.branch_sets_connected(orig), "branch set not connected in trial " + std::to_string(trial));
    const auto h = m.quotient(orig, true);
    const auto p = eccentric_shortest_path(h, std::uniform_int_distribution<Vertex>(0, h.order() - 1)(rng));
    require(naive_induced(h, p), "pre-lift path not induced in trial " + std::to_string(trial));
    const auto lifted = lift_induced_path(orig, m, p);
    require(naive_induced(orig, lifted), "lifted path not induced in trial " + std::to_string(trial));
    require(lifted.size() >= p.size(), "lift shortened the path in trial " + std::to_string(trial));
  }
  return {1000, ""};
}

std::string strip_time(const std::string& csv) {
  return std::regex_replace(csv, std::regex(",[^,\n]*\n"), "\n");
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome bench_suite() {
  const auto dir = std::filesystem::temp_directory_path() / ("ipath_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto grid = (dir / "grid.json").string();
  write_text_file(grid, R"({"rows": [
    {"generator": "worstcase", "n": {"from": 10, "to": 30, "step": 5}, "k": [3, 4], "extract": {"name": "pathwidth"}, "oracle": true},
    {"generator": "path-power", "n": [100, 400], "k": [2, 3], "extract": {"name": "pathwidth"}},
    {"generator": "random", "seed": {"from": 1, "to": 6}, "profile": "ktree", "n": 200, "k": 3, "extract": {"name": "treewidth"}},
    {"generator": "random", "seed": [1, 2, 3], "profile": "bounded-degree", "n": 1000, "k": 4, "extract": {"name": "bounded-degree"}},
    {"generator": "chained-cliques", "q": [8, 16], "s": 4, "extract": {"name": "adhesion"}}
  ]})");
  std::vector<std::string> csv;
  for (const char* threads : {"1", "4"}) {
    const auto out = (dir / (std::string("run") + threads + ".csv")).string();
    const int code = shell(std::string(IPATH_CLI) + " bench " + grid + " --threads " + threads + " -o " + out);
    require(code == 0, "bench exited with " + std::to_string(code));
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    csv.push_back(ss.str());
  }
  std::filesystem::remove_all(dir);
  const auto rows = static_cast<std::size_t>(std::count(csv[0].begin(), csv[0].end(), '\n')) - 1;
  require(rows > 0, "bench produced no rows");
  require(csv[0].find("ERROR") == std::string::npos, "bench reported an error row");
  require(strip_time(csv[0]) == strip_time(csv[1]), "CSV output differs between runs");
  return {rows, "rows identical modulo time"};
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // 0 means no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pathwidth (3L)^k >= n", 60, pathwidth_suite},
      {2, "worst-case family (L*-1)^k <= n^2", 120, worstcase_suite},
      {3, "treewidth 2^((4L)^k) >= n", 60, treewidth_suite},
      {4, "weight lemma", 0, weight_suite},
      {5, "make_varied host order <= |G|", 0, varied_suite},
      {6, "bounded degree Delta^L >= n", 30, degree_suite},
      {7, "adhesion (3L)^(2a) >= ell, width <= 2a-1", 0, adhesion_suite},
      {8, "certificate order <= oracle (n <= 22)", 0, oracle_suite},
      {9, "lift soundness over 1000 contractions", 0, lift_suite},
      {10, "bench determinism", 0, bench_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = clock_type::now();
    bool ok = true;
    std::string detail;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(clock_type::now() - start).count();
    if (ok && c.budget_s > 0 && secs > c.budget_s) {
      ok = false;
      detail = "over the time budget";
    }
    if (ok) detail = std::to_string(out.instances) + " instances" + (out.note.empty() ? "" : ", " + out.note);
    char timing[64];
    if (c.budget_s > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.budget_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing << ") "
              << detail << std::endl;
    failed += !ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
