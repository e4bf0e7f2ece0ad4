// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sdfs/apps.hpp"
#include "sdfs/apps_sparse.hpp"
#include "sdfs/dfs.hpp"
#include "sdfs/dfs_sparse.hpp"
#include "sdfs/harness.hpp"

using namespace sdfs;

namespace {

// Pinned tolerances and constants.
constexpr double kCriterion1Seconds = 10.0;
constexpr std::uint64_t kRegisterBudget = 64;  // times ceil(log2(n+2))
constexpr double kGroupedSlope = 0.8;
constexpr double kGroupedSlack = 32;
constexpr double kJensenRelTol = 1e-9;
constexpr double kColorBitsPerVertex = 1.62;
constexpr double kZeroIndegreeSlack = 3.0 / 64;  // words of summary per vertex
constexpr std::uint64_t kZeroIndegreeFixed = 256;
constexpr double kQueryWorkPerItem = 8.0;
constexpr double kLogstarScalingRatio = 1.5;
constexpr double kLoglogC = 6.0;
constexpr double kLoglogSpread = 1.5;  // max/min of the ratio over the grid
constexpr double kInspectionC = 4.0;
constexpr Vertex kShadowMaxN = 300;

constexpr std::uint64_t kSuiteSeed = 20240611;

struct Result {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Check {
 public:
  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Result result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s); first: " + first_ + "; " + summary};
  }

 private:
  std::uint64_t failures_ = 0;
  std::string first_;
};

std::string fmt(double x, int prec = 3) {
  std::ostringstream s;
  s.precision(prec);
  s << std::fixed << x;
  return s.str();
}

const std::vector<harness::SuiteGraph>& random_part() {
  static const auto s = harness::random_suite(1000, 200, kSuiteSeed);
  return s;
}

// Random graphs plus every fixed family.
const std::vector<harness::SuiteGraph>& suite() {
  static const auto s = [] {
    auto all = random_part();
    for (auto& f : harness::family_suite()) all.push_back(std::move(f));
    return all;
  }();
  return s;
}

// Deep, thin graphs whose DFS stack outgrows a single segment.
const std::vector<harness::SuiteGraph>& forced_restoration() {
  static const auto s = [] {
    std::vector<harness::SuiteGraph> out;
    for (Vertex n : {1u << 12, 1u << 14, 1u << 16}) {
      out.push_back({"path" + std::to_string(n), harness::path_graph(n)});
      out.push_back({"cycle" + std::to_string(n), harness::cycle_graph(n)});
      out.push_back({"ladder" + std::to_string(n), harness::ladder_graph(n / 2)});
    }
    return out;
  }();
  return s;
}

std::vector<Event> dense_events(const AdjGraph& g) {
  EventRecorder rec;
  dfs_dense(g, rec);
  return rec.events;
}

Result criterion1() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t graphs = 0;
  for (const auto& sg : random_part()) {
    c.expect(dense_events(sg.g) == harness::oracle_dfs_events(sg.g), sg.name);
    ++graphs;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(graphs == 1000, "suite size " + std::to_string(graphs));
  c.expect(secs < kCriterion1Seconds, "took " + fmt(secs) + " s");
  return c.result(std::to_string(graphs) + " graphs in " + fmt(secs) + " s");
}

Result criterion2() {
  Check c;
  double worst = 0;
  for (const auto& sg : suite()) {
    const auto& g = sg.g;
    EventRecorder rec;
    auto st = dfs_dense(g, rec);
    std::uint64_t l = l_metric(g, -1);
    std::uint64_t budget = g.n() + l + kRegisterBudget * ceil_log2(g.n() + 2);
    c.expect(st.stack_peak_bits <= l, sg.name + " stack " + std::to_string(st.stack_peak_bits) + " > L " +
                                          std::to_string(l));
    c.expect(st.meter.total_peak() <= budget, sg.name + " total " + std::to_string(st.meter.total_peak()));
    if (budget) worst = std::max(worst, static_cast<double>(st.meter.total_peak()) / budget);
  }
  return c.result(std::to_string(suite().size()) + " graphs, worst total/budget " + fmt(worst));
}

Result criterion3() {
  Check c;
  double worst = 0;
  for (const auto& sg : suite()) {
    const auto& g = sg.g;
    EventRecorder plain, grouped;
    dfs_dense(g, plain);
    auto st = dfs_dense(g, grouped, DenseVariant::grouped);
    double bound = kGroupedSlope * g.m() + kGroupedSlack;
    c.expect(static_cast<double>(st.stack_peak_bits) <= bound, sg.name + " grouped stack " +
                                                                   std::to_string(st.stack_peak_bits));
    c.expect(plain.events == grouped.events, sg.name + " events differ");
    worst = std::max(worst, st.stack_peak_bits / bound);
  }
  return c.result("worst stack/bound " + fmt(worst));
}

Result criterion4() {
  Check c;
  std::size_t checked = 0;
  auto within = [&](double lhs, double rhs, const std::string& what) {
    c.expect(lhs <= rhs * (1 + kJensenRelTol), what + " " + fmt(lhs, 6) + " > " + fmt(rhs, 6));
  };
  for (const auto& sg : suite()) {
    const auto& g = sg.g;
    if (g.m() == 0) continue;
    within(static_cast<double>(l_metric(g, 1)), l1_jensen_bound(g), sg.name + " total");
    if (g.directed()) {
      within(static_cast<double>(l_metric(g, 1, DegreeMode::in)), l1_jensen_bound(g, DegreeMode::in),
             sg.name + " in");
      within(static_cast<double>(l_metric(g, 1, DegreeMode::out)), l1_jensen_bound(g, DegreeMode::out),
             sg.name + " out");
    }
    ++checked;
  }
  return c.result(std::to_string(checked) + " graphs with m >= 1");
}

Partition scc_partition(const AdjGraph& g, bool euler) {
  CollectingSink sink;
  if (euler) scc_euler(g, sink);
  else scc_parent(g, sink);
  Partition p;
  for (auto& comp : sink.components) p.push_back(std::move(comp.vertices));
  canonicalize(p);
  return p;
}

Result criterion5() {
  Check c;
  auto digraphs = harness::random_suite(500, 100, kSuiteSeed + 5, false, true);
  for (const auto& sg : digraphs) {
    auto want = harness::tarjan_scc(sg.g);
    c.expect(scc_partition(sg.g, true) == want, sg.name + " euler");
    c.expect(scc_partition(sg.g, false) == want, sg.name + " parent");
  }
  double worst = 0;
  for (Vertex n : {1u << 10, 1u << 12, 1u << 14, 1u << 16}) {
    auto g = harness::random_graph(n, 2ull * n, GraphMode::directed, n);
    BitMeter m;
    CollectingSink sink;
    scc_euler(g, sink, {false, nullptr, &m});
    double per = static_cast<double>(m.peak("colors")) / n;
    c.expect(per <= kColorBitsPerVertex, "colors " + fmt(per) + " bits/vertex at n=" + std::to_string(n));
    worst = std::max(worst, per);
  }
  return c.result(std::to_string(digraphs.size()) + " digraphs, colors " + fmt(worst) + " bits/vertex");
}

Result criterion6() {
  Check c;
  std::mt19937_64 rng(kSuiteSeed + 6);
  for (int i = 0; i < 200; ++i) {
    Vertex n = 1 + rng() % 200;
    auto g = harness::random_dag(n, rng() % (4ull * n), rng());
    auto order = toposort(g);
    std::vector<Vertex> pos(n + 1, 0);
    for (Vertex k = 0; k < order.size(); ++k) pos[order[k]] = k + 1;
    bool ok = order.size() == n && std::none_of(pos.begin() + 1, pos.end(), [](Vertex p) { return p == 0; });
    for (auto [u, v] : g.edges()) ok = ok && pos[u] < pos[v];
    c.expect(ok, "dag " + std::to_string(i));
  }
  int cyclic = 0;
  for (int i = 0; i < 100; ++i) {
    Vertex n = 2 + rng() % 60;
    auto g = harness::random_graph(n, 2ull * n, GraphMode::directed, rng());
    if (harness::tarjan_scc(g).size() == n) continue;
    ++cyclic;
    bool thrown = false;
    try {
      toposort(g);
    } catch (const CyclicGraphError&) {
      thrown = true;
    }
    c.expect(thrown, "cyclic graph " + std::to_string(i) + " accepted");
  }
  for (Vertex n : {1u << 10, 1u << 14, 1u << 16}) {
    auto g = harness::random_dag(n, 3ull * n, n);
    BitMeter m;
    toposort(g, &m);
    auto bits = m.peak("zero_indegree_set");
    c.expect(bits >= n && bits <= n + kZeroIndegreeSlack * n + kZeroIndegreeFixed,
             "zero-indegree set " + std::to_string(bits) + " bits at n=" + std::to_string(n));
  }
  return c.result("200 dags, " + std::to_string(cyclic) + " cyclic rejected");
}

std::vector<Component> dense_components(const AdjGraph& g, BccKind k) {
  CollectingSink sink;
  bcc_suite(g, k, OutputSelector::both, sink);
  canonicalize(sink.components);
  return sink.components;
}

bool connected(const AdjGraph& g) {
  std::vector<Vertex> up(g.n() + 1);
  std::iota(up.begin(), up.end(), 0);
  std::function<Vertex(Vertex)> find = [&](Vertex x) { return up[x] == x ? x : up[x] = find(up[x]); };
  Vertex parts = g.n();
  for (auto [u, v] : g.edges())
    if (find(u) != find(v)) {
      up[find(u)] = find(v);
      --parts;
    }
  return parts == 1;
}

std::vector<Edge> normalized(std::vector<Edge> es) {
  for (auto& [u, v] : es)
    if (u > v) std::swap(u, v);
  std::sort(es.begin(), es.end());
  return es;
}

Result criterion7() {
  Check c;
  std::size_t removal = 0;
  for (const auto& sg : suite()) {
    const auto& g = sg.g;
    if (g.directed() || g.n() > 50) continue;
    c.expect(cut_vertices(g) == harness::removal_cut_vertices(g), sg.name + " cut vertices");
    std::vector<Edge> want;
    for (auto i : harness::removal_bridges(g)) want.push_back(g.edges()[i]);
    c.expect(normalized(bridges(g)) == normalized(want), sg.name + " bridges");
    c.expect(dense_components(g, BccKind::bcc) == harness::removal_bccs(g), sg.name + " bcc");
    c.expect(dense_components(g, BccKind::tecc) == harness::removal_2eccs(g), sg.name + " 2ecc");
    ++removal;
  }
  std::mt19937_64 rng(kSuiteSeed + 7);
  int exhaustive = 0;
  for (int attempt = 0; attempt < 10000 && exhaustive < 300; ++attempt) {
    Vertex n = 2 + rng() % 7;
    std::uint64_t m = (n - 1) + rng() % (13 - (n - 1));
    auto g = harness::random_graph(n, m, GraphMode::undirected, rng());
    if (!connected(g)) continue;
    c.expect(dense_components(g, BccKind::bcc) == harness::cycle_bccs(g), serialize_graph(g) + " bcc");
    c.expect(dense_components(g, BccKind::tecc) == harness::trail_2eccs(g), serialize_graph(g) + " 2ecc");
    ++exhaustive;
  }
  c.expect(exhaustive >= 200, "only " + std::to_string(exhaustive) + " exhaustive instances");
  return c.result(std::to_string(removal) + " removal-checked, " + std::to_string(exhaustive) + " exhaustive");
}

Result criterion8() {
  Check c;
  double worst = 0;
  std::uint64_t queries = 0;
  for (const auto& sg : suite()) {
    const auto& g = sg.g;
    if (g.directed() || g.n() > 50) continue;
    for (auto kind : {BccKind::bcc, BccKind::tecc}) {
      auto full = dense_components(g, kind);
      ComponentQuery cq(g, kind);
      for (auto [u, v] : g.edges()) {
        Edge e{std::min(u, v), std::max(u, v)};
        const Component* want = nullptr;
        for (const auto& comp : full)
          if (std::binary_search(comp.edges.begin(), comp.edges.end(), e)) want = &comp;
        if (!want) {
          c.fail(sg.name + " edge missing from full run");
          continue;
        }
        for (auto [x, y] : {Edge{u, v}, Edge{v, u}}) {
          CollectingSink sink;
          cq.query(x, y, OutputSelector::both, sink);
          canonicalize(sink.components);
          c.expect(sink.components == std::vector<Component>{*want},
                   sg.name + " query " + std::to_string(x) + "," + std::to_string(y));
          double items = static_cast<double>(want->vertices.size() + want->edges.size());
          worst = std::max(worst, cq.last_work() / items);
          ++queries;
        }
      }
    }
  }
  c.expect(worst <= kQueryWorkPerItem, "work per item " + fmt(worst));
  return c.result(std::to_string(queries) + " queries, worst work/item " + fmt(worst));
}

unsigned log_star(double x) {
  unsigned r = 0;
  for (; x > 1; ++r) x = std::log2(x);
  return r;
}

struct SparseRun {
  const char* name;
  std::function<DfsStats(const AdjGraph&, DfsEvents&)> run;
};

const std::vector<SparseRun>& sparse_runs() {
  static const std::vector<SparseRun> runs{
      {"loglog", [](const AdjGraph& g, DfsEvents& e) { return dfs_loglog(g, e); }},
      {"logstar", [](const AdjGraph& g, DfsEvents& e) { return dfs_logstar(g, e); }},
      {"fixed-k=1", [](const AdjGraph& g, DfsEvents& e) { return dfs_fixed_k(g, 1, e); }},
      {"fixed-k=2", [](const AdjGraph& g, DfsEvents& e) { return dfs_fixed_k(g, 2, e); }},
  };
  return runs;
}

Result criterion9() {
  Check c;
  std::string witness;
  std::uint64_t runs = 0;
  auto check = [&](const harness::SuiteGraph& sg) {
    auto want = dense_events(sg.g);
    for (const auto& r : sparse_runs()) {
      EventRecorder rec;
      auto st = r.run(sg.g, rec);
      c.expect(rec.events == want, sg.name + " " + r.name);
      if (witness.empty() && st.restorations >= 3 && st.joins >= 1)
        witness = sg.name + " " + r.name + " (" + std::to_string(st.restorations) + " restorations, " +
                  std::to_string(st.joins) + " joins)";
      ++runs;
    }
  };
  for (const auto& sg : suite()) check(sg);
  for (const auto& sg : forced_restoration()) check(sg);
  c.expect(!witness.empty(), "no run with >= 3 restorations and >= 1 join");
  return c.result(std::to_string(runs) + " runs; witness " + (witness.empty() ? "none" : witness));
}

// Random undirected graphs at the density grid points.
AdjGraph grid_graph(Vertex n, std::uint64_t density) {
  return harness::random_graph(n, density * n, GraphMode::undirected, kSuiteSeed + n + density);
}

Result criterion10() {
  Check c;
  std::vector<double> per_vertex;
  std::string logstar_detail;
  for (Vertex n : {1u << 10, 1u << 12, 1u << 14, 1u << 16}) {
    DfsEvents none;
    auto st = dfs_logstar(grid_graph(n, 4), none);
    per_vertex.push_back(static_cast<double>(st.meter.total_peak()) / n);
    logstar_detail += (logstar_detail.empty() ? "" : "/") + fmt(per_vertex.back(), 2);
  }
  auto [lo, hi] = std::minmax_element(per_vertex.begin(), per_vertex.end());
  double ratio = *hi / *lo;
  c.expect(ratio <= kLogstarScalingRatio, "logstar bits/n ratio " + fmt(ratio));

  double worst = 0, best = 1e300;
  for (std::uint64_t d : {1, 4, 16, 64}) {
    const Vertex n = 1u << 14;
    DfsEvents none;
    auto st = dfs_loglog(grid_graph(n, d), none);
    double scale = n * (std::log2(std::log2(4.0 + d)) + 2);
    double r = st.meter.total_peak() / scale;
    c.expect(r <= kLoglogC, "loglog at m/n=" + std::to_string(d) + " ratio " + fmt(r));
    worst = std::max(worst, r);
    best = std::min(best, r);
  }
  c.expect(worst / best <= kLoglogSpread, "loglog ratio spread " + fmt(worst / best));
  return c.result("logstar bits/n " + logstar_detail + " (ratio " + fmt(ratio) + "), loglog C in [" + fmt(best) +
                  ", " + fmt(worst) + "]");
}

Result criterion11() {
  Check c;
  std::uint64_t runs = 0, shadowed = 0;
  auto check = [&](const harness::SuiteGraph& sg) {
    if (sg.g.directed()) return;
    for (auto kind : {BccKind::cut, BccKind::bridge, BccKind::bcc, BccKind::tecc}) {
      auto want = dense_components(sg.g, kind);
      for (auto [variant, k] : {std::pair{SparseVariant::logstar, 1u}, std::pair{SparseVariant::fixed_k, 1u},
                                std::pair{SparseVariant::fixed_k, 2u}}) {
        SparseBccOptions opt;
        opt.variant = variant;
        opt.k = k;
        opt.shadow_r = sg.g.n() <= kShadowMaxN;
        CollectingSink sink;
        std::string tag = sg.name + " kind " + std::to_string(static_cast<int>(kind)) + " k=" + std::to_string(k);
        try {
          bcc_suite_sparse(sg.g, kind, OutputSelector::both, sink, opt);
          canonicalize(sink.components);
          c.expect(sink.components == want, tag);
        } catch (const ShadowMismatch& e) {
          c.fail(tag + " shadow: " + e.what());
        }
        ++runs;
        shadowed += opt.shadow_r;
      }
    }
  };
  for (const auto& sg : suite()) check(sg);
  for (const auto& sg : forced_restoration()) check(sg);
  return c.result(std::to_string(runs) + " runs, " + std::to_string(shadowed) + " with shadow checks");
}

Result criterion12() {
  Check c;
  double worst = 0, best = 1e300;
  auto check = [&](const AdjGraph& g) {
    DfsEvents none;
    auto st = dfs_logstar(g, none);
    double scale = g.n() + static_cast<double>(g.m()) * log_star(g.n());
    double r = st.inspections / scale;
    c.expect(r <= kInspectionC, "n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + " ratio " + fmt(r));
    worst = std::max(worst, r);
    best = std::min(best, r);
  };
  for (Vertex n : {1u << 10, 1u << 12, 1u << 14, 1u << 16}) check(grid_graph(n, 4));
  for (std::uint64_t d : {1, 4, 16, 64}) check(grid_graph(1u << 14, d));
  return c.result("inspections/(n + m log* n) in [" + fmt(best) + ", " + fmt(worst) + "]");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Result (*)()>> criteria{
      {"dense dfs equals oracle event sequence", criterion1},
      {"dense dfs space within n + L_-1 + registers", criterion2},
      {"grouped stack within 4m/5 + 32, same events", criterion3},
      {"L_1 within the Jensen bounds", criterion4},
      {"scc partitions and color array size", criterion5},
      {"topological order, cycle rejection, zero-indegree set", criterion6},
      {"cut, bridge, bcc, 2ecc against oracles", criterion7},
      {"component query output and work", criterion8},
      {"sparse dfs variants equal dense", criterion9},
      {"sparse dfs space scaling", criterion10},
      {"sparse bcc suite equals dense", criterion11},
      {"logstar inspection scaling", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2zu  %s: %s [%.1f s]\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                r.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
