#include <gtest/gtest.h>

#include "sdfs/apps.hpp"
#include "sdfs/apps_sparse.hpp"
#include "sdfs/harness.hpp"
#include "print.hpp"

using namespace sdfs;

namespace {

constexpr BccKind kKinds[] = {BccKind::cut, BccKind::bridge, BccKind::bcc, BccKind::tecc};

std::vector<Component> dense(const AdjGraph& g, BccKind k, OutputSelector o = OutputSelector::both) {
  CollectingSink s;
  bcc_suite(g, k, o, s);
  canonicalize(s.components);
  return s.components;
}

std::vector<Component> sparse(const AdjGraph& g, BccKind k, SparseBccOptions opt, SparseBccStats* st = nullptr,
                              OutputSelector o = OutputSelector::both) {
  CollectingSink s;
  auto r = bcc_suite_sparse(g, k, o, s, opt);
  if (st) *st = r;
  canonicalize(s.components);
  return s.components;
}

std::vector<SparseBccOptions> configs() {
  std::vector<SparseBccOptions> out;
  for (std::uint64_t s : {3, 4, 7}) {
    out.push_back({SparseVariant::logstar, 1, s, true});
    out.push_back({SparseVariant::fixed_k, 1, s, true});
    out.push_back({SparseVariant::fixed_k, 2, s, true});
  }
  return out;
}

}  // namespace

TEST(BccSparse, MatchesDenseOnRandomSuite) {
  std::uint64_t restorations = 0, joins = 0, splits = 0, reads = 0;
  auto suite = harness::random_suite(150, 300, 61, true, false);
  for (const auto& sg : harness::family_suite())
    if (!sg.g.directed() && sg.g.n() <= 300) suite.push_back(sg);
  for (const auto& sg : suite) {
    for (auto k : kKinds) {
      auto want = dense(sg.g, k);
      for (const auto& opt : configs()) {
        SparseBccStats st;
        ASSERT_EQ(sparse(sg.g, k, opt, &st), want) << sg.name << " kind " << static_cast<int>(k) << " s "
                                                   << opt.segment_size << " k " << opt.k;
        EXPECT_LE(st.stack_pops, st.stack_pushes);
        restorations += st.dfs.restorations;
        joins += st.dfs.joins;
        splits += st.dfs.splits;
        reads += st.shadow_reads;
      }
    }
  }
  EXPECT_GT(restorations, 1000u);
  EXPECT_GT(joins, 100u);
  EXPECT_GT(splits, 100u);
  EXPECT_GT(reads, 10000u);
}

TEST(BccSparse, OutputSelectors) {
  for (const auto& sg : harness::random_suite(40, 120, 62, true, false))
    for (auto k : {BccKind::bcc, BccKind::tecc})
      for (auto o : {OutputSelector::vertices, OutputSelector::edges})
        EXPECT_EQ(sparse(sg.g, k, {SparseVariant::logstar, 1, 3, true}, nullptr, o), dense(sg.g, k, o)) << sg.name;
}

TEST(BccSparse, SmallBowtieNeedsNoRestoration) {
  auto g = harness::bowtie_graph();
  for (auto k : kKinds) {
    SparseBccStats st;
    EXPECT_EQ(sparse(g, k, {}, &st), dense(g, k));
    EXPECT_EQ(st.dfs.restorations, 0u);
  }
}

TEST(BccSparse, LadderAndCycleForceRestorations) {
  auto ladder = harness::ladder_graph(2048);
  for (auto k : kKinds) {
    SparseBccStats st;
    EXPECT_EQ(sparse(ladder, k, {SparseVariant::logstar, 1, 0, true}, &st), dense(ladder, k));
    EXPECT_GT(st.dfs.restorations, 0u);
  }
  auto cycle = harness::cycle_graph(8192);
  SparseBccStats st;
  auto blocks = sparse(cycle, BccKind::bcc, {SparseVariant::logstar, 1, 0, true}, &st);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].vertices.size(), 8192u);
  EXPECT_EQ(blocks[0].edges.size(), 8192u);
  EXPECT_GT(st.dfs.restorations, 0u);
  EXPECT_TRUE(sparse(cycle, BccKind::cut, {}).empty());
  EXPECT_TRUE(sparse(cycle, BccKind::bridge, {}).empty());
}

TEST(BccSparse, RejectsBadOptions) {
  auto g = harness::path_graph(3);
  CollectingSink s;
  EXPECT_THROW(bcc_suite_sparse(g, BccKind::bcc, OutputSelector::both, s, {SparseVariant::logstar, 1, 2, false}),
               std::invalid_argument);
  EXPECT_THROW(bcc_suite_sparse(g, BccKind::bcc, OutputSelector::both, s, {SparseVariant::loglog, 1, 0, false}),
               std::invalid_argument);
  auto d = harness::cycle_graph(3, GraphMode::directed);
  EXPECT_THROW(bcc_suite_sparse(d, BccKind::bcc, OutputSelector::both, s), ModeError);
}
