#include <gtest/gtest.h>

#include <cmath>

#include "sdfs/dfs.hpp"
#include "sdfs/harness.hpp"

using namespace sdfs;

namespace {

std::vector<std::string> trace(const AdjGraph& g, DenseVariant v = DenseVariant::plain) {
  EventRecorder rec;
  dfs_dense(g, rec, v);
  std::vector<std::string> out;
  for (const auto& e : rec.events) out.push_back(format_event(e));
  return out;
}

}  // namespace

TEST(DfsDense, SingleEdgeTrace) {
  auto g = build_graph(2, {{1, 2}}, GraphMode::undirected);
  std::vector<std::string> want{"pre 1", "tree 1 2", "pre 2", "back 2 1 (parent)",
                                "post 2", "retreat 1 2", "post 1"};
  EXPECT_EQ(trace(g), want);
}

TEST(DfsDense, K4PeakStack) {
  auto g = harness::complete_graph(4);
  EventRecorder rec;
  auto st = dfs_dense(g, rec);
  EXPECT_EQ(st.stack_peak_bits, 2u);
  EXPECT_LE(st.stack_peak_bits, l_metric(g, -1));
  auto parents = dfs_forest_parents(g);
  EXPECT_EQ(parents, (std::vector<Vertex>{0, 0, 1, 2, 3}));
}

TEST(DfsDense, EmptyGraph) {
  auto g = build_graph(3, {}, GraphMode::undirected);
  EXPECT_EQ(trace(g), (std::vector<std::string>{"pre 1", "post 1", "pre 2", "post 2", "pre 3", "post 3"}));
  EventRecorder rec;
  EXPECT_EQ(dfs_dense(g, rec).stack_peak_bits, 0u);
}

TEST(DfsDense, ForestParents) {
  auto cyc = harness::cycle_graph(3, GraphMode::directed);
  EXPECT_EQ(dfs_forest_parents(cyc), (std::vector<Vertex>{0, 0, 1, 2}));
  EXPECT_EQ(dfs_forest_parents(build_graph(1, {}, GraphMode::undirected)), (std::vector<Vertex>{0, 0}));
  auto two = build_graph(4, {{1, 2}, {3, 4}}, GraphMode::undirected);
  EXPECT_EQ(dfs_forest_parents(two), (std::vector<Vertex>{0, 0, 1, 0, 3}));
}

TEST(DfsDense, DirectedSkipsIncoming) {
  auto g = build_graph(3, {{2, 1}, {2, 3}}, GraphMode::directed);
  EXPECT_EQ(trace(g), (std::vector<std::string>{"pre 1", "post 1", "pre 2", "back 2 1", "tree 2 3",
                                                "pre 3", "post 3", "retreat 2 3", "post 2"}));
}

TEST(DfsDense, OracleEquivalenceAndSpace) {
  auto suite = harness::random_suite(400, 200, 17);
  for (auto& f : harness::family_suite()) suite.push_back(std::move(f));
  for (const auto& [name, g] : suite) {
    EventRecorder plain, grouped;
    auto sp = dfs_dense(g, plain);
    auto sg = dfs_dense(g, grouped, DenseVariant::grouped);
    auto oracle = harness::oracle_dfs_events(g);
    ASSERT_EQ(plain.events, oracle) << name;
    ASSERT_EQ(grouped.events, oracle) << name;
    ASSERT_LE(sp.stack_peak_bits, l_metric(g, -1)) << name;
    ASSERT_LE(sp.meter.total_peak(), g.n() + l_metric(g, -1) + 64 * ceil_log2(g.n() + 2)) << name;
    ASSERT_LE(static_cast<double>(sg.stack_peak_bits), 0.8 * g.m() + 32) << name;
    std::uint64_t degsum = 2 * g.m();
    ASSERT_LE(sp.inspections, 2 * degsum + g.n()) << name;
  }
}
