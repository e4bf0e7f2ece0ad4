#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sdfs/apps.hpp"
#include "sdfs/harness.hpp"
#include "print.hpp"

using namespace sdfs;

using harness::SuiteGraph;

namespace {

Partition scc_partition(const AdjGraph& g, bool parent_variant, SccOptions opt = {}) {
  CollectingSink sink;
  if (parent_variant) scc_parent(g, sink, opt);
  else scc_euler(g, sink, opt);
  Partition p = vertex_partition(sink.components);
  canonicalize(p);
  return p;
}

std::vector<Component> collect_bcc(const AdjGraph& g, BccKind k, OutputSelector o = OutputSelector::both) {
  CollectingSink sink;
  bcc_suite(g, k, o, sink);
  canonicalize(sink.components);
  return sink.components;
}

AdjGraph undirected(Vertex n, std::initializer_list<Edge> e) { return build_graph(n, e, GraphMode::undirected); }
AdjGraph directed(Vertex n, std::initializer_list<Edge> e) { return build_graph(n, e, GraphMode::directed); }

}  // namespace

TEST(Parents, ExamplesFromLexicographicTrace) {
  auto path = undirected(3, {{1, 2}, {2, 3}});
  auto p = compute_parents(path);
  EXPECT_TRUE(p.is_root(1));
  EXPECT_EQ(p.parent(2), 1u);
  EXPECT_EQ(p.parent(3), 2u);
  auto empty = build_graph(2, std::span<const Edge>{}, GraphMode::undirected);
  auto e = compute_parents(empty);
  EXPECT_TRUE(e.is_root(1));
  EXPECT_TRUE(e.is_root(2));
  auto complete = harness::complete_graph(4);
  auto k4 = compute_parents(complete);
  EXPECT_EQ(k4.parent(2), 1u);
  EXPECT_EQ(k4.parent(3), 2u);
  EXPECT_EQ(k4.parent(4), 3u);
}

TEST(Parents, ChainsEndAtRoots) {
  for (const auto& sg : harness::random_suite(120, 80, 11)) {
    auto p = compute_parents(sg.g);
    for (Vertex v = 1; v <= sg.g.n(); ++v) {
      Vertex x = v;
      std::uint64_t steps = 0;
      while (!p.is_root(x)) {
        x = p.parent(x);
        ASSERT_LE(++steps, sg.g.n()) << sg.name;
      }
      // roots of the lexicographic forest are the smallest vertex of their tree
      EXPECT_LE(x, v) << sg.name;
    }
  }
}

TEST(Scc, SpecExamples) {
  EXPECT_EQ(scc_partition(directed(3, {{1, 2}, {2, 3}, {3, 1}}), false), (Partition{{1, 2, 3}}));
  EXPECT_EQ(scc_partition(directed(3, {{1, 2}, {1, 3}}), false), (Partition{{1}, {2}, {3}}));
  EXPECT_EQ(scc_partition(directed(1, {}), true), (Partition{{1}}));
  EXPECT_EQ(scc_partition(directed(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}}), true), (Partition{{1, 2}, {3, 4}}));

  auto g = directed(3, {{1, 2}, {2, 1}, {2, 3}});
  for (bool pv : {false, true}) {
    std::vector<Edge> inter;
    SccOptions opt;
    opt.with_edges = true;
    opt.inter_component = &inter;
    CollectingSink sink;
    if (pv) scc_parent(g, sink, opt);
    else scc_euler(g, sink, opt);
    ASSERT_EQ(sink.components.size(), 2u);
    auto comps = sink.components;
    canonicalize(comps, false);
    EXPECT_EQ(comps[0].vertices, (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(comps[0].edges.size(), 2u);
    EXPECT_EQ(comps[1].vertices, (std::vector<Vertex>{3}));
    EXPECT_TRUE(comps[1].edges.empty());
    EXPECT_EQ(inter, (std::vector<Edge>{{2, 3}}));
  }
  EXPECT_THROW(scc_partition(undirected(2, {{1, 2}}), false), ModeError);
  EXPECT_THROW(scc_partition(undirected(2, {{1, 2}}), true), ModeError);
}

TEST(Scc, MatchesTarjanOnRandomDigraphs) {
  auto suite = harness::random_suite(500, 100, 5, false, true);
  ASSERT_EQ(suite.size(), 500u);
  for (const auto& sg : suite) {
    auto want = harness::tarjan_scc(sg.g);
    EXPECT_EQ(scc_partition(sg.g, false), want) << sg.name;
    EXPECT_EQ(scc_partition(sg.g, true), want) << sg.name;
    if (sg.g.n() <= 30) {
      EXPECT_EQ(harness::reachability_scc(sg.g), want) << sg.name;
    }
  }
}

TEST(Scc, EdgesPartitionByComponent) {
  for (const auto& sg : harness::random_suite(150, 60, 8, false, true)) {
    auto want = harness::tarjan_scc(sg.g);
    std::vector<std::size_t> comp_of(sg.g.n() + 1);
    for (std::size_t i = 0; i < want.size(); ++i)
      for (Vertex v : want[i]) comp_of[v] = i;
    for (bool pv : {false, true}) {
      std::vector<Edge> inter;
      SccOptions opt;
      opt.with_edges = true;
      opt.inter_component = &inter;
      CollectingSink sink;
      if (pv) scc_parent(sg.g, sink, opt);
      else scc_euler(sg.g, sink, opt);
      std::multiset<Edge> got(inter.begin(), inter.end());
      for (const auto& c : sink.components)
        for (const auto& e : c.edges) {
          EXPECT_EQ(comp_of[e.first], comp_of[e.second]) << sg.name;
          got.insert(e);
        }
      std::multiset<Edge> all(sg.g.edges().begin(), sg.g.edges().end());
      EXPECT_EQ(got, all) << sg.name;
      for (const auto& e : inter) EXPECT_NE(comp_of[e.first], comp_of[e.second]) << sg.name;
    }
  }
}

TEST(Scc, ColorArrayNearLog3) {
  for (Vertex n : {1u << 10, 1u << 12, 1u << 14}) {
    auto g = harness::random_graph(n, 2ull * n, GraphMode::directed, n);
    BitMeter m;
    CollectingSink sink;
    scc_euler(g, sink, {false, nullptr, &m});
    EXPECT_LE(static_cast<double>(m.peak("colors")), 1.62 * n) << n;
    EXPECT_EQ(m.peak("euler_record"), 2 * g.m());
  }
}

TEST(Toposort, Examples) {
  EXPECT_EQ(toposort(directed(3, {{1, 2}, {2, 3}})), (std::vector<Vertex>{1, 2, 3}));
  auto order = toposort(directed(3, {{1, 3}, {2, 3}}));
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order.back(), 3u);
  EXPECT_THROW(toposort(directed(2, {{1, 2}, {2, 1}})), CyclicGraphError);
  EXPECT_THROW(toposort(undirected(2, {{1, 2}})), ModeError);
}

TEST(Toposort, RandomDagsAndCycles) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Vertex n = 1 + rng() % 150;
    std::uint64_t m = rng() % (4 * n);
    auto g = harness::random_dag(n, m, i);
    auto order = toposort(g);
    ASSERT_EQ(order.size(), n);
    std::vector<Vertex> pos(n + 1, 0);
    for (Vertex k = 0; k < n; ++k) pos[order[k]] = k + 1;
    for (Vertex v = 1; v <= n; ++v) ASSERT_NE(pos[v], 0u);
    for (const auto& [u, v] : g.edges()) EXPECT_LT(pos[u], pos[v]);
  }
  for (int i = 0; i < 100; ++i) {
    Vertex n = 2 + rng() % 60;
    auto g = harness::random_graph(n, 2 * n, GraphMode::directed, 1000 + i);
    bool cyclic = harness::tarjan_scc(g).size() < n;
    if (cyclic) {
      try {
        toposort(g);
        ADD_FAILURE() << "cycle not reported";
      } catch (const CyclicGraphError& e) {
        // the named vertex cannot be removed, so it lies on or after a cycle
        EXPECT_GE(e.vertex(), 1u);
        EXPECT_LE(e.vertex(), n);
      }
    } else {
      EXPECT_EQ(toposort(g).size(), n);
    }
  }
}

TEST(Toposort, ZeroIndegreeSetSpace) {
  for (Vertex n : {1u << 10, 1u << 14}) {
    auto g = harness::random_dag(n, 3ull * n, 9);
    BitMeter m;
    toposort(g, &m);
    auto bits = m.peak("zero_indegree_set");
    EXPECT_GE(bits, n);
    EXPECT_LE(bits, n + n / 64 * 3 + 256) << n;
  }
}

namespace {

std::vector<Vertex> parent_vector(const ParentArray& p) {
  const auto& g = p.graph();
  std::vector<Vertex> out(g.n() + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) out[v] = p.parent(v);
  return out;
}

std::vector<Edge> sorted_edges(std::vector<Edge> e) {
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<Edge> oracle_bridges(const AdjGraph& g) {
  std::vector<Edge> out;
  for (auto i : harness::removal_bridges(g)) out.push_back(g.edges()[i]);
  return sorted_edges(out);
}

AdjGraph bowtie() { return harness::bowtie_graph(); }

void check_all_modes(const AdjGraph& g, const std::string& name) {
  auto P = compute_parents(g);
  auto want = harness::exhaustive_p(g, parent_vector(P));
  std::vector<bool> seen(g.n() + 1, false);
  MarkPass fused(g, P, MarkMode::fused);
  fused.run([&](Vertex v) { seen[v] = true; });
  for (auto mode : {MarkMode::ternary, MarkMode::separate}) {
    auto q = mark_pass(g, P, mode);
    for (Vertex v = 1; v <= g.n(); ++v) ASSERT_EQ(q[v], want[v]) << name << " v=" << v;
  }
  for (Vertex v = 1; v <= g.n(); ++v) EXPECT_TRUE(seen[v]) << name;
}

}  // namespace

TEST(MarkPass, Examples) {
  auto tri = undirected(3, {{1, 2}, {2, 3}, {1, 3}});
  auto P = compute_parents(tri);
  ASSERT_EQ(P.parent(2), 1u);
  ASSERT_EQ(P.parent(3), 2u);
  auto q = mark_pass(tri, P);
  EXPECT_FALSE(q[2]);
  EXPECT_TRUE(q[3]);

  auto tree = harness::star_graph(6);
  auto qt = mark_pass(tree, compute_parents(tree));
  for (Vertex v = 1; v <= 6; ++v) EXPECT_FALSE(qt[v]);

  auto b = bowtie();
  auto Pb = compute_parents(b);
  auto qb = mark_pass(b, Pb, MarkMode::ternary);
  auto want = harness::exhaustive_p(b, parent_vector(Pb));
  for (Vertex v = 1; v <= 5; ++v) EXPECT_EQ(qb[v], want[v]) << v;
  // P is false at 1 (a root), at the root's child, and below the cut vertex
  for (Vertex v = 1; v <= 5; ++v)
    if (Pb.parent(v) == 3 || Pb.parent(v) == 1 || Pb.is_root(v)) {
      EXPECT_FALSE(qb[v]) << v;
    }
}

TEST(MarkPass, MatchesDefinitionOnSuite) {
  for (const auto& sg : harness::random_suite(300, 60, 21, true, false)) check_all_modes(sg.g, sg.name);
  for (const auto& sg : harness::family_suite())
    if (!sg.g.directed() && sg.g.n() <= 200) check_all_modes(sg.g, sg.name);
}

TEST(Bcc, SpecExamples) {
  auto b = bowtie();
  EXPECT_EQ(cut_vertices(b), (std::vector<Vertex>{3}));
  EXPECT_TRUE(bridges(b).empty());
  auto bc = collect_bcc(b, BccKind::bcc);
  ASSERT_EQ(bc.size(), 2u);
  EXPECT_EQ(bc[0].vertices, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(bc[1].vertices, (std::vector<Vertex>{3, 4, 5}));
  // a closed trail runs through both triangles, so they form one 2ECC
  auto tc = collect_bcc(b, BccKind::tecc);
  ASSERT_EQ(tc.size(), 1u);
  EXPECT_EQ(tc[0].vertices, (std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_EQ(tc, harness::trail_2eccs(b));

  auto e = undirected(2, {{1, 2}});
  EXPECT_TRUE(cut_vertices(e).empty());
  EXPECT_EQ(bridges(e), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(collect_bcc(e, BccKind::bcc), (std::vector<Component>{{{1, 2}, {{1, 2}}}}));

  auto p4 = harness::path_graph(4);
  EXPECT_EQ(cut_vertices(p4), (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(sorted_edges(bridges(p4)), (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
  std::vector<Component> singles{{{1, 2}, {{1, 2}}}, {{2, 3}, {{2, 3}}}, {{3, 4}, {{3, 4}}}};
  EXPECT_EQ(collect_bcc(p4, BccKind::bcc), singles);
  EXPECT_EQ(collect_bcc(p4, BccKind::tecc), singles);
}

TEST(Bcc, IsolatedVerticesOnlyInVertexModes) {
  auto g = build_graph(3, {{1, 2}}, GraphMode::undirected);
  auto both = collect_bcc(g, BccKind::bcc);
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[0].vertices, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(both[1].vertices, (std::vector<Vertex>{3}));
  EXPECT_EQ(collect_bcc(g, BccKind::bcc, OutputSelector::edges).size(), 1u);
}

namespace {

void check_against_removal(const AdjGraph& g, const std::string& name) {
  EXPECT_EQ(cut_vertices(g), harness::removal_cut_vertices(g)) << name;
  EXPECT_EQ(sorted_edges(bridges(g)), oracle_bridges(g)) << name;
  EXPECT_EQ(collect_bcc(g, BccKind::bcc), harness::removal_bccs(g)) << name;
  EXPECT_EQ(collect_bcc(g, BccKind::tecc), harness::removal_2eccs(g)) << name;
}

// Components arrive contiguously and cover every edge once.
void check_stream(const AdjGraph& g, BccKind k, const std::string& name) {
  CollectingSink sink;
  bcc_suite(g, k, OutputSelector::edges, sink);
  std::multiset<Edge> got;
  for (const auto& c : sink.components) {
    EXPECT_FALSE(c.edges.empty()) << name;
    for (auto e : c.edges) got.insert(sorted_edges({e})[0]);
  }
  auto all = sorted_edges(g.edges());
  EXPECT_EQ(std::vector<Edge>(got.begin(), got.end()), all) << name;
}

}  // namespace

TEST(Bcc, MatchesRemovalOracleOnSuite) {
  int checked = 0;
  for (const auto& sg : harness::random_suite(400, 50, 31, true, false)) {
    check_against_removal(sg.g, sg.name);
    check_stream(sg.g, BccKind::bcc, sg.name);
    check_stream(sg.g, BccKind::tecc, sg.name);
    ++checked;
  }
  for (const auto& sg : harness::family_suite())
    if (!sg.g.directed() && sg.g.n() <= 50) {
      check_against_removal(sg.g, sg.name);
      ++checked;
    }
  EXPECT_GE(checked, 400);
}

TEST(Bcc, ExhaustiveSmallConnectedGraphs) {
  std::mt19937_64 rng(77);
  int instances = 0;
  for (int attempt = 0; attempt < 5000 && instances < 400; ++attempt) {
    Vertex n = 2 + rng() % 7;
    std::uint64_t m = (n - 1) + rng() % (13 - (n - 1));
    auto g = harness::random_graph(n, m, GraphMode::undirected, rng());
    // connected: components of the lexicographic forest are one tree
    auto P = compute_parents(g);
    int roots = 0;
    for (Vertex v = 1; v <= n; ++v) roots += P.is_root(v);
    if (roots != 1) continue;
    EXPECT_EQ(collect_bcc(g, BccKind::bcc), harness::cycle_bccs(g)) << serialize_graph(g);
    EXPECT_EQ(collect_bcc(g, BccKind::tecc), harness::trail_2eccs(g)) << serialize_graph(g);
    ++instances;
  }
  EXPECT_GE(instances, 200);
}

TEST(Bcc, TreeEdgesOfEachBlockFormSubtree) {
  for (const auto& sg : harness::random_suite(200, 12, 41, true, false)) {
    const auto& g = sg.g;
    auto P = compute_parents(g);
    for (const auto& c : collect_bcc(g, BccKind::bcc, OutputSelector::edges)) {
      std::set<Edge> es(c.edges.begin(), c.edges.end());
      std::set<Vertex> child, touched;
      for (Vertex v = 1; v <= g.n(); ++v) {
        if (P.is_root(v)) continue;
        Edge e{std::min(v, P.parent(v)), std::max(v, P.parent(v))};
        if (es.count(e)) {
          child.insert(v);
          touched.insert(v);
          touched.insert(P.parent(v));
        }
      }
      std::vector<Vertex> tops;
      for (Vertex v : touched)
        if (!child.count(v)) tops.push_back(v);
      ASSERT_EQ(tops.size(), 1u) << sg.name;
      int top_children = 0;
      for (Vertex v : child) top_children += P.parent(v) == tops[0];
      EXPECT_EQ(top_children, 1) << sg.name;
    }
  }
}

namespace {

std::vector<Component> query_one(ComponentQuery& cq, Vertex x, Vertex y) {
  CollectingSink sink;
  cq.query(x, y, OutputSelector::both, sink);
  canonicalize(sink.components);
  return sink.components;
}

// Largest work/(output size) ratio seen over the graph.
double check_queries(const AdjGraph& g, BccKind k, const std::string& name) {
  auto full = collect_bcc(g, k);
  ComponentQuery cq(g, k);
  double worst = 0;
  for (auto [u, v] : g.edges()) {
    Edge e{std::min(u, v), std::max(u, v)};
    const Component* want = nullptr;
    for (const auto& c : full)
      if (std::binary_search(c.edges.begin(), c.edges.end(), e)) want = &c;
    EXPECT_NE(want, nullptr) << name;
    if (!want) continue;
    for (auto [x, y] : {Edge{u, v}, Edge{v, u}}) {
      auto got = query_one(cq, x, y);
      EXPECT_EQ(got, std::vector<Component>{*want}) << name << " edge " << x << "," << y;
      double size = static_cast<double>(want->vertices.size() + want->edges.size());
      worst = std::max(worst, static_cast<double>(cq.last_work()) / size);
    }
  }
  return worst;
}

}  // namespace

TEST(ComponentQuery, Examples) {
  auto b = bowtie();
  ComponentQuery cq(b, BccKind::bcc);
  auto got = query_one(cq, 1, 2);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].vertices, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(sorted_edges(got[0].edges), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}}));

  auto e = undirected(2, {{1, 2}});
  ComponentQuery ce(e, BccKind::bcc);
  EXPECT_EQ(query_one(ce, 2, 1), (std::vector<Component>{{{1, 2}, {{1, 2}}}}));

  auto p4 = harness::path_graph(4);
  for (auto k : {BccKind::bcc, BccKind::tecc}) {
    ComponentQuery cp(p4, k);
    EXPECT_EQ(query_one(cp, 2, 3), (std::vector<Component>{{{2, 3}, {{2, 3}}}}));
  }

  CollectingSink sink;
  EXPECT_THROW(cq.query(1, 4, OutputSelector::both, sink), UnknownEdgeError);
  EXPECT_THROW(cq.query(1, 1, OutputSelector::both, sink), UnknownEdgeError);
  EXPECT_THROW(cq.query(1, 9, OutputSelector::both, sink), UnknownEdgeError);
}

TEST(ComponentQuery, MatchesFullRunWithBoundedWork) {
  double worst = 0;
  for (const auto& sg : harness::random_suite(250, 50, 51, true, false))
    for (auto k : {BccKind::bcc, BccKind::tecc}) worst = std::max(worst, check_queries(sg.g, k, sg.name));
  for (const auto& sg : harness::family_suite())
    if (!sg.g.directed() && sg.g.n() <= 50)
      for (auto k : {BccKind::bcc, BccKind::tecc}) worst = std::max(worst, check_queries(sg.g, k, sg.name));
  EXPECT_LE(worst, 8.0);
  std::cout << "worst work per output item: " << worst << "\n";
}
