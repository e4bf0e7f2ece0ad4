#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdfs/components.hpp"
#include "sdfs/dfs.hpp"
#include "sdfs/graph.hpp"

namespace sdfs::harness {

// Generators. All are deterministic for a fixed seed.

/// m edges with endpoints drawn uniformly; no self-loops. With simple set,
/// parallel edges are avoided too (m must not exceed the number of pairs).
AdjGraph random_graph(Vertex n, std::uint64_t m, GraphMode mode, std::uint64_t seed, bool simple = false);
AdjGraph path_graph(Vertex n);
AdjGraph cycle_graph(Vertex n, GraphMode mode = GraphMode::undirected);
AdjGraph complete_graph(Vertex n);
/// Center 1 joined to 2..n.
AdjGraph star_graph(Vertex n);
/// Rails 1..len and len+1..2len with rungs {i, len+i}.
AdjGraph ladder_graph(Vertex len);
/// Two triangles sharing vertex 3: {1,2,3} and {3,4,5}.
AdjGraph bowtie_graph();
/// k triangles sharing vertex 1.
AdjGraph bowtie_family(Vertex k);
/// Edges only from lower to higher position of a random permutation.
AdjGraph random_dag(Vertex n, std::uint64_t m, std::uint64_t seed);
/// Configuration model on the given degrees; self-loops are discarded.
AdjGraph degree_sequence_graph(const std::vector<Slot>& degrees, std::uint64_t seed);

/// Named graph with a family tag, for suites.
struct SuiteGraph {
  std::string name;
  AdjGraph g;
};

/// Seeded random graphs: n <= max_n, m/n in {0.5, 1, 2, 8}, both modes
/// unless restricted.
std::vector<SuiteGraph> random_suite(std::size_t count, Vertex max_n, std::uint64_t seed,
                                     bool undirected = true, bool directed = true);
/// Fixed small graphs of every family.
std::vector<SuiteGraph> family_suite();

// Oracles. They use nothing from the library apart from AdjGraph.

/// Recursive-free DFS with an explicit (vertex, next position) stack.
std::vector<Event> oracle_dfs_events(const AdjGraph& g);
/// Tarjan's algorithm, canonical form.
Partition tarjan_scc(const AdjGraph& g);
/// Pairwise reachability, n <= 30.
Partition reachability_scc(const AdjGraph& g);
/// Vertices whose removal increases the component count. n <= 50.
std::vector<Vertex> removal_cut_vertices(const AdjGraph& g);
/// Edges (by input index) whose removal increases the component count.
std::vector<std::size_t> removal_bridges(const AdjGraph& g);
/// P(w) evaluated from its definition against a given forest (parent[root] = 0).
std::vector<bool> exhaustive_p(const AdjGraph& g, const std::vector<Vertex>& parent);
/// Blocks from enumeration of simple cycles (n <= 12); isolated vertices
/// are zero-edge components.
std::vector<Component> cycle_bccs(const AdjGraph& g);
/// 2ECCs from enumeration of closed trails (m <= 20); each bridge is its own
/// component and isolated vertices are zero-edge components.
std::vector<Component> trail_2eccs(const AdjGraph& g);
/// Same partitions as above, derived from removal tests; usable up to n <= 50.
std::vector<Component> removal_bccs(const AdjGraph& g);
std::vector<Component> removal_2eccs(const AdjGraph& g);

// Instrumentation.

/// One traversal to measure. algo is dense, grouped, loglog, logstar or
/// fixed_k.
struct RunDescriptor {
  std::string algo = "dense";
  unsigned k = 1;
  bool eager = false;
  std::uint64_t segment_size = 0;
};

struct Measurement {
  std::string algo;
  Vertex n = 0;
  std::uint64_t m = 0;
  DfsStats stats;
  /// {"algo", "n", "m", "stats": {counters..., "meter": {...}}}
  std::string to_json() const;
};

/// Runs the traversal, forwarding events when a sink is given. Throws
/// std::invalid_argument for an unknown algorithm name.
Measurement measure(const AdjGraph& g, const RunDescriptor& run, DfsEvents* events = nullptr);

class OracleLimit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sdfs::harness
