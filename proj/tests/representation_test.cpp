#include <gtest/gtest.h>

#include "ipath/errors.hpp"
#include "ipath/exact.hpp"
#include "ipath/generators.hpp"
#include "ipath/representation.hpp"
#include "support.hpp"

namespace ipath {
namespace {

std::vector<NodeEdge> path_edges(Node m) {
  std::vector<NodeEdge> e;
  for (Node t = 0; t + 1 < m; ++t) e.emplace_back(t, t + 1);
  return e;
}

Representation p4_rep() {
  const std::vector<VertexSet> bags{{0, 1}, {1, 2}, {2, 3}};
  return from_bags(HostKind::kPath, 3, path_edges(3), bags, Graph::path(4));
}

bool subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_varied(const Representation& rep) {
  for (auto [a, b] : rep.host_edges())
    if (subset(rep.bag(a), rep.bag(b)) || subset(rep.bag(b), rep.bag(a))) return false;
  return true;
}

// Random path representation that is usually not varied: every bag is
// duplicated a random number of times.
Representation inflate(const Representation& rep, const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexSet> bags;
  for (Node t = 0; t < rep.host_order(); ++t) {
    const auto b = rep.bag(t);
    const int copies = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int c = 0; c < copies; ++c) bags.emplace_back(b.begin(), b.end());
  }
  const auto m = static_cast<Node>(bags.size());
  return from_bags(HostKind::kPath, m, path_edges(m), bags, g);
}

TEST(Bag, Examples) {
  const std::vector<NodeSet> one(3, NodeSet{0});
  const auto single = Representation::from_models(HostKind::kTree, 1, {}, one);
  EXPECT_EQ(std::vector<Vertex>(single.bag(0).begin(), single.bag(0).end()),
            (std::vector<Vertex>{0, 1, 2}));

  // P_3 as three unit intervals [i, i+1] on the 4-node path.
  const std::vector<NodeSet> unit{{0, 1}, {1, 2}, {2, 3}};
  const auto p3 = Representation::from_models(HostKind::kPath, 4, path_edges(4), unit);
  p3.validate(Graph::path(3));
  EXPECT_EQ(std::vector<Vertex>(p3.bag(1).begin(), p3.bag(1).end()), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(std::vector<Vertex>(p3.bag(2).begin(), p3.bag(2).end()), (std::vector<Vertex>{1, 2}));

  const auto w = gen_worstcase_interval(15, 3);
  EXPECT_LE(w.rep->bag(0).size(), 3u);
}

TEST(FromBags, Examples) {
  const auto rep = p4_rep();
  EXPECT_EQ(rep.width(), 1);
  EXPECT_EQ(rep.adhesion(), 1);
  const std::vector<VertexSet> broken{{0}, {1}, {0}};
  try {
    from_bags(HostKind::kPath, 3, path_edges(3), broken, Graph(2));
    FAIL() << "disconnected model accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 0"), std::string::npos);
  }
  const std::vector<VertexSet> uncovered{{0, 1}, {2, 3}};
  try {
    from_bags(HostKind::kPath, 2, path_edges(2), uncovered, Graph::path(4));
    FAIL() << "uncovered edge accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2}"), std::string::npos);
  }
}

TEST(FromBags, KtreeCliqueTree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = gen_random_validated(seed, RandomProfile::kKtreePathBuilt, 30, 4);
    inst.rep->validate(inst.graph);
    EXPECT_LE(inst.rep->width(), 3);
    const auto again = from_bags(inst.rep->kind(), inst.rep->host_order(), inst.rep->host_edges(),
                                 inst.rep->bags(), inst.graph);
    EXPECT_EQ(again, *inst.rep);
  }
}

TEST(Validation, DroppingAModelNodeIsRejectedWithWitness) {
  std::mt19937_64 rng(5);
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = gen_random_validated(seed, RandomProfile::kInterval, 20, 4);
    auto models = inst.rep->models();
    const Vertex v = std::uniform_int_distribution<Vertex>(0, inst.graph.order() - 1)(rng);
    if (models[v].size() < 2) continue;
    models[v].pop_back();  // keep the model connected, shrink it from the right
    const auto mutated =
        Representation::from_models(HostKind::kPath, inst.rep->host_order(), inst.rep->host_edges(), models);
    // The mutation only fails when an edge of v lost its witness node.
    bool covered = true;
    for (Vertex w : inst.graph.neighbors(v)) {
      std::vector<Node> common;
      std::set_intersection(models[v].begin(), models[v].end(), models[w].begin(), models[w].end(),
                            std::back_inserter(common));
      if (common.empty()) covered = false;
    }
    if (covered) {
      EXPECT_NO_THROW(mutated.validate(inst.graph));
    } else {
      ++rejected;
      try {
        mutated.validate(inst.graph);
        ADD_FAILURE() << "mutation accepted";
      } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("is not covered"), std::string::npos);
      }
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(Adhesion, Examples) {
  const auto rep = p4_rep();
  EXPECT_EQ(adhesion_set(rep, 1, 2), (VertexSet{2}));
  const std::vector<VertexSet> disjoint{{0}, {1}};
  const auto d = from_bags(HostKind::kPath, 2, path_edges(2), disjoint, Graph(2));
  EXPECT_TRUE(adhesion_set(d, 0, 1).empty());
  const auto g = gen_worstcase_interval(20, 4);
  for (auto [a, b] : g.rep->host_edges()) EXPECT_LT(adhesion_set(*g.rep, a, b).size(), 4u);
  EXPECT_THROW(adhesion_set(rep, 0, 2), InputError);
}

TEST(Torso, Examples) {
  // Leaf with empty adhesion keeps G[bag].
  const std::vector<VertexSet> disjoint{{0, 1}, {2}};
  const Graph g2(3, std::vector<Edge>{{0, 1}});
  const auto d = from_bags(HostKind::kPath, 2, path_edges(2), disjoint, g2);
  EXPECT_EQ(torso(d, g2, 0).graph, Graph::complete(2));

  // Star host: centre bag {0,1}, leaf bag {0,1,2}; 0 and 1 are not adjacent.
  const Graph g(3, std::vector<Edge>{{0, 2}, {1, 2}});
  const std::vector<VertexSet> bags{{0, 1}, {0, 1, 2}};
  const auto s = from_bags(HostKind::kTree, 2, path_edges(2), bags, g);
  EXPECT_EQ(torso(s, g, 0).graph, Graph::complete(2));
}

TEST(Torso, ContainsInducedBagGraph) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = gen_random_validated(seed, RandomProfile::kKtreePathBuilt, 25, 3);
    for (Node t = 0; t < inst.rep->host_order(); ++t) {
      const auto tor = torso(*inst.rep, inst.graph, t);
      const auto bag = inst.rep->bag(t);
      for (std::size_t i = 0; i < bag.size(); ++i)
        for (std::size_t j = i + 1; j < bag.size(); ++j)
          if (inst.graph.adjacent(bag[i], bag[j])) {
            EXPECT_TRUE(tor.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)));
          }
    }
  }
}

TEST(MakeVaried, Examples) {
  const auto rep = p4_rep();
  EXPECT_EQ(make_varied(rep, Graph::path(4)).rep, rep);
  const std::vector<VertexSet> same(5, VertexSet{0, 1});
  const auto flat = from_bags(HostKind::kPath, 5, path_edges(5), same, Graph::path(2));
  const auto v = make_varied(flat, Graph::path(2));
  EXPECT_EQ(v.rep.host_order(), 1);
  EXPECT_EQ(v.node_map, (std::vector<Node>{0, 0, 0, 0, 0}));
}

TEST(MakeVaried, PropertiesOnRandomReps) {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto profile = seed % 2 ? RandomProfile::kInterval : RandomProfile::kKtreePathBuilt;
    const auto inst = gen_random_validated(seed, profile, 24, 4);
    const auto rep = profile == RandomProfile::kInterval ? inflate(*inst.rep, inst.graph, rng) : *inst.rep;
    const auto once = make_varied(rep, inst.graph).rep;
    EXPECT_TRUE(once.varied());
    EXPECT_TRUE(is_varied(once));
    EXPECT_NO_THROW(once.validate(inst.graph));
    EXPECT_LE(once.width(), rep.width());
    EXPECT_LE(once.adhesion(), rep.adhesion());
    EXPECT_EQ(make_varied(once, inst.graph).rep, once);
    if (once.kind() == HostKind::kPath) {
      EXPECT_LE(once.host_order(), inst.graph.order());
    }
  }
}

TEST(Weights, Examples) {
  const auto rep = p4_rep();
  EXPECT_EQ(path_weight(rep, std::vector<Node>{0, 1, 2}), 4u);
  EXPECT_EQ(path_weight(rep, std::vector<Node>{1}), 2u);
  // Natural decomposition of P_n, endpoint node: n - 2.
  const Vertex n = 9;
  std::vector<VertexSet> bags;
  for (Vertex i = 0; i + 1 < n; ++i) bags.push_back({i, i + 1});
  const auto pn = from_bags(HostKind::kPath, n - 1, path_edges(n - 1), bags, Graph::path(n));
  EXPECT_EQ(node_weight(pn, 0), static_cast<std::size_t>(n - 2));
  const std::vector<NodeSet> one(3, NodeSet{0});
  EXPECT_EQ(node_weight(Representation::from_models(HostKind::kTree, 1, {}, one), 0), 0u);

  const auto w = gen_worstcase_interval(15, 3);
  std::vector<Node> host(static_cast<std::size_t>(w.rep->host_order()));
  std::iota(host.begin(), host.end(), 0);
  EXPECT_EQ(path_weight(*w.rep, host), 28u);
}

TEST(MaxWeightPath, Examples) {
  const auto rep = p4_rep();
  const auto whole = max_weight_path(rep);
  EXPECT_EQ(whole.weight, 4u);
  EXPECT_EQ(whole.path.size(), 3u);

  // Star host 0-{1,2,3}; leaf 3 carries the heavy bag.
  const Graph g(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {4, 5}});
  const std::vector<VertexSet> bags{{0}, {0, 1}, {0, 2}, {0, 3, 4, 5}};
  const std::vector<NodeEdge> star{{0, 1}, {0, 2}, {0, 3}};
  const auto s = from_bags(HostKind::kTree, 4, star, bags, g);
  const auto best = max_weight_path(s);
  EXPECT_EQ(best.weight, 5u);
  EXPECT_NE(std::find(best.path.begin(), best.path.end(), 3), best.path.end());
  EXPECT_EQ(best.path, (NodePath{1, 0, 3}));  // least leaf pair wins the tie with {2,0,3}
}

TEST(MaxWeightPath, MeetsLogBoundOnVariedReps) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(seed % 3);
    const auto inst = gen_random_validated(seed, RandomProfile::kKtreePathBuilt, 40, k);
    const auto varied = make_varied(*inst.rep, inst.graph).rep;
    const auto w = max_weight_path(varied).weight;
    // weight >= ceil(log_{k+1}(n+1)), i.e. (k+1)^w >= n+1 fails only below the bound.
    BigInt pw = 1;
    std::size_t need = 0;
    while (pw < inst.graph.order() + 1) {
      pw *= k + 1;
      ++need;
    }
    EXPECT_GE(w, need);
  }
}

TEST(WeightLemma, EveryNodeOfRandomReps) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto profile = seed % 2 ? RandomProfile::kInterval : RandomProfile::kKtreePathBuilt;
    const auto inst = gen_random_validated(seed, profile, 30, 2 + static_cast<std::int64_t>(seed % 4));
    const auto& rep = *inst.rep;
    const unsigned k = static_cast<unsigned>(rep.width() + 1);
    for (Node x = 0; x < rep.host_order(); ++x) {
      const auto w = node_weight(rep, x);
      EXPECT_LE(BigInt(inst.graph.order()), ipow(k + 1, static_cast<unsigned>(w + 1)) - 1);
    }
  }
}

TEST(RestrictToPath, Examples) {
  const auto rep = p4_rep();
  EXPECT_EQ(restrict_to_path(rep, Graph::path(4), std::vector<Node>{0, 1, 2}), rep);

  const Graph g(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const std::vector<VertexSet> bags{{0, 1, 2}, {1, 2}, {0, 1}};
  const std::vector<NodeEdge> star{{0, 1}, {0, 2}};
  const auto s = from_bags(HostKind::kTree, 3, star, bags, g);
  const auto r = restrict_to_path(s, g, std::vector<Node>{0, 1});
  EXPECT_EQ(r.kind(), HostKind::kPath);
  EXPECT_EQ(r.host_order(), 2);
  EXPECT_LE(r.width(), s.width());

  const std::vector<VertexSet> far{{0, 1}, {1, 2}, {2}};
  const auto f = from_bags(HostKind::kPath, 3, path_edges(3), far, g);
  EXPECT_THROW(restrict_to_path(f, g, std::vector<Node>{0}), InputError);
}

TEST(HellyProperty, GeneratorCliquesLieInABag) {
  std::vector<GeneratedInstance> insts{gen_worstcase_interval(15, 3), gen_worstcase_interval(20, 4),
                                       gen_worstcase_interval(30, 5), gen_path_power(12, 3)};
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    insts.push_back(gen_random_validated(seed, RandomProfile::kInterval, 18, 4));
  for (const auto& inst : insts) {
    const auto& g = inst.graph;
    const auto& rep = *inst.rep;
    std::vector<Vertex> clique;
    auto in_some_bag = [&] {
      for (Node t = 0; t < rep.host_order(); ++t)
        if (subset(clique, rep.bag(t))) return true;
      return false;
    };
    auto rec = [&](auto&& self, Vertex from) -> void {
      EXPECT_TRUE(in_some_bag()) << inst.family;
      for (Vertex v = from; v < g.order(); ++v) {
        bool ok = true;
        for (Vertex c : clique) ok = ok && g.adjacent(c, v);
        if (!ok) continue;
        clique.push_back(v);
        self(self, v + 1);
        clique.pop_back();
      }
    };
    rec(rec, 0);
  }
}

TEST(ConnectedUnion, ModelsOfConnectedSetsFormSubtrees) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = gen_random_validated(seed, RandomProfile::kKtreePathBuilt, 20, 3);
    const auto& rep = *inst.rep;
    // Every shortest path is connected; the union of its models must be a subtree.
    const auto p = shortest_path(inst.graph, 0, inst.graph.order() - 1);
    std::set<Node> nodes;
    for (Vertex v : p) nodes.insert(rep.model(v).begin(), rep.model(v).end());
    std::set<Node> seen{*nodes.begin()};
    std::vector<Node> stack{*nodes.begin()};
    while (!stack.empty()) {
      const Node t = stack.back();
      stack.pop_back();
      for (Node u : rep.host_neighbors(t))
        if (nodes.count(u) && seen.insert(u).second) stack.push_back(u);
    }
    EXPECT_EQ(seen, nodes);
  }
}

}  // namespace
}  // namespace ipath
