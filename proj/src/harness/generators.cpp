#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sdfs/harness.hpp"

namespace sdfs::harness {

AdjGraph random_graph(Vertex n, std::uint64_t m, GraphMode mode, std::uint64_t seed, bool simple) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  if (n < 2) return build_graph(n, edges, mode);
  std::uniform_int_distribution<Vertex> pick(1, n);
  std::set<Edge> seen;
  std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
  if (mode == GraphMode::undirected) pairs /= 2;
  if (simple && m > pairs) throw std::invalid_argument("too many edges for a simple graph");
  while (edges.size() < m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (simple) {
      Edge key = mode == GraphMode::undirected ? Edge{std::min(u, v), std::max(u, v)} : Edge{u, v};
      if (!seen.insert(key).second) continue;
    }
    edges.emplace_back(u, v);
  }
  return build_graph(n, edges, mode);
}

AdjGraph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges, GraphMode::undirected);
}

AdjGraph cycle_graph(Vertex n, GraphMode mode) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 2 && (n >= 3 || mode == GraphMode::directed)) edges.emplace_back(n, 1);
  return build_graph(n, edges, mode);
}

AdjGraph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges, GraphMode::undirected);
}

AdjGraph star_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return build_graph(n, edges, GraphMode::undirected);
}

AdjGraph ladder_graph(Vertex len) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < len; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(len + i, len + i + 1);
  }
  for (Vertex i = 1; i <= len; ++i) edges.emplace_back(i, len + i);
  return build_graph(2 * len, edges, GraphMode::undirected);
}

AdjGraph bowtie_graph() {
  return build_graph(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}}, GraphMode::undirected);
}

AdjGraph bowtie_family(Vertex k) {
  std::vector<Edge> edges;
  for (Vertex t = 0; t < k; ++t) {
    Vertex a = 2 + 2 * t, b = 3 + 2 * t;
    edges.emplace_back(1, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, 1);
  }
  return build_graph(1 + 2 * k, edges, GraphMode::undirected);
}

AdjGraph random_dag(Vertex n, std::uint64_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    while (edges.size() < m) {
      Vertex a = pick(rng), b = pick(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      edges.emplace_back(order[a], order[b]);
    }
  }
  return build_graph(n, edges, GraphMode::directed);
}

AdjGraph degree_sequence_graph(const std::vector<Slot>& degrees, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> stubs;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (Slot k = 0; k < degrees[i]; ++k) stubs.push_back(static_cast<Vertex>(i + 1));
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
    if (stubs[i] != stubs[i + 1]) edges.emplace_back(stubs[i], stubs[i + 1]);
  return build_graph(static_cast<Vertex>(degrees.size()), edges, GraphMode::undirected);
}

std::vector<SuiteGraph> random_suite(std::size_t count, Vertex max_n, std::uint64_t seed,
                                     bool undirected, bool directed) {
  static constexpr double kDensities[] = {0.5, 1.0, 2.0, 8.0};
  std::mt19937_64 rng(seed);
  std::vector<SuiteGraph> out;
  out.reserve(count);
  std::uniform_int_distribution<Vertex> size(1, max_n);
  for (std::size_t i = 0; i < count; ++i) {
    Vertex n = size(rng);
    double density = kDensities[i % 4];
    GraphMode mode = GraphMode::undirected;
    if (undirected && directed) mode = (i / 4) % 2 ? GraphMode::directed : GraphMode::undirected;
    else if (directed) mode = GraphMode::directed;
    auto m = static_cast<std::uint64_t>(density * n);
    bool simple = (i / 8) % 2 == 0;
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / (mode == GraphMode::undirected ? 2 : 1);
    if (simple) m = std::min(m, pairs);
    std::uint64_t gseed = rng();
    out.push_back({"random_" + std::to_string(i) + "_n" + std::to_string(n) + "_m" + std::to_string(m) +
                       (mode == GraphMode::directed ? "_d" : "_u"),
                   random_graph(n, m, mode, gseed, simple)});
  }
  return out;
}

std::vector<SuiteGraph> family_suite() {
  std::vector<SuiteGraph> out;
  out.push_back({"single_vertex", build_graph(1, {}, GraphMode::undirected)});
  out.push_back({"single_edge", build_graph(2, {{1, 2}}, GraphMode::undirected)});
  out.push_back({"empty3", build_graph(3, {}, GraphMode::undirected)});
  out.push_back({"double_edge", build_graph(2, {{1, 2}, {2, 1}}, GraphMode::undirected)});
  out.push_back({"path4", path_graph(4)});
  out.push_back({"path17", path_graph(17)});
  out.push_back({"cycle5", cycle_graph(5)});
  out.push_back({"cycle3_directed", cycle_graph(3, GraphMode::directed)});
  out.push_back({"k4", complete_graph(4)});
  out.push_back({"k7", complete_graph(7)});
  out.push_back({"star5", star_graph(5)});
  out.push_back({"ladder6", ladder_graph(6)});
  out.push_back({"bowtie", bowtie_graph()});
  out.push_back({"bowtie4", bowtie_family(4)});
  out.push_back({"dag30", random_dag(30, 60, 7)});
  out.push_back({"degseq", degree_sequence_graph({4, 4, 6, 6, 7, 7, 3, 3, 2, 2, 1, 1}, 11)});
  out.push_back({"two_components", build_graph(4, {{1, 2}, {3, 4}}, GraphMode::undirected)});
  return out;
}

}  // namespace sdfs::harness
