#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sdfs/bit_meter.hpp"
#include "sdfs/choice_dict.hpp"
#include "sdfs/components.hpp"
#include "sdfs/graph.hpp"
#include "sdfs/packed.hpp"
#include "sdfs/static_alloc.hpp"
#include "sdfs/ternary_array.hpp"

namespace sdfs {

class ModeError : public GraphError {
 public:
  using GraphError::GraphError;
};

class CyclicGraphError : public GraphError {
 public:
  explicit CyclicGraphError(Vertex v)
      : GraphError("graph has a cycle through vertex " + std::to_string(v)), vertex_(v) {}
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

/// Parent references of the lexicographic DFS forest (roots 1..n, slots in
/// array order). Each vertex stores the position of its parent among its
/// incident slots (incoming slots when directed) in ceil(log2(d+1)) bits;
/// the value d means "root".
class ParentArray {
 public:
  ParentArray() = default;
  explicit ParentArray(const AdjGraph& g);

  bool is_root(Vertex v) const { return refs_.read(v) == span(v); }
  /// Slot at v of the tree edge to its parent; v must not be a root.
  Slot parent_slot(Vertex v) const { return static_cast<Slot>(refs_.read(v) + base(v)); }
  Vertex parent(Vertex v) const { return is_root(v) ? 0 : g_->head(v, parent_slot(v)); }
  void set_parent_slot(Vertex v, Slot s) { refs_.write(v, s - base(v)); }
  void set_root(Vertex v) { refs_.write(v, span(v)); }
  /// True if slot i at u is the tree edge to a child of u.
  bool is_child_slot(Vertex u, Slot i) const {
    Vertex w = g_->head(u, i);
    return !is_root(w) && parent_slot(w) == g_->mate(u, i) && g_->outgoing(u, i);
  }
  std::uint64_t bits() const noexcept { return refs_.bits(); }
  const AdjGraph& graph() const noexcept { return *g_; }

 private:
  Slot base(Vertex v) const { return g_->directed() ? g_->outdeg(v) : 0; }
  Slot span(Vertex v) const { return g_->directed() ? g_->indeg(v) : g_->deg(v); }
  const AdjGraph* g_ = nullptr;
  StaticAllocArray refs_;
};

/// Lexicographic DFS forest using n extra bits; withdrawals follow the
/// freshly written parent references.
ParentArray compute_parents(const AdjGraph& g, BitMeter* meter = nullptr);

struct SccOptions {
  bool with_edges = false;
  /// Receives the edges whose endpoints lie in different components.
  std::vector<Edge>* inter_component = nullptr;
  BitMeter* meter = nullptr;
};

/// Kosaraju-Sharir with an Euler bit record of the first search.
void scc_euler(const AdjGraph& g, ComponentSink& out, SccOptions opt = {});
/// Same partition, first search represented by parent references.
void scc_parent(const AdjGraph& g, ComponentSink& out, SccOptions opt = {});

/// Repeatedly removes a vertex of indegree 0. Throws CyclicGraphError.
std::vector<Vertex> toposort(const AdjGraph& g, BitMeter* meter = nullptr);

/// How the marking pass tells ancestors from descendants.
enum class MarkMode {
  fused,     // consult Q itself; Q[v] is set once v has been reached
  ternary,   // ancestor flag and Q share one trit per vertex
  separate,  // two bit arrays
};

/// Q[w] = P(w): w has a parent v and an edge joins a descendant of w to a
/// proper ancestor of v.
class MarkArray {
 public:
  MarkArray() = default;
  explicit MarkArray(std::vector<bool> q) : q_(std::move(q)) {}
  bool operator[](Vertex v) const { return q_[v]; }
  const std::vector<bool>& values() const noexcept { return q_; }

 private:
  std::vector<bool> q_;
};

/// The marking pass over the lexicographic forest. on_arrive(v) runs at
/// the preorder visit of v, after the nontree edges leading down from v
/// have been processed and before v's own mark is overwritten in fused
/// mode; q() may be consulted from it.
class MarkPass {
 public:
  MarkPass(const AdjGraph& g, const ParentArray& parents, MarkMode mode, BitMeter* meter = nullptr);
  void run(const std::function<void(Vertex)>& on_arrive = {});
  bool q(Vertex v) const;
  /// Final marks; not available in fused mode.
  MarkArray result() const;

 private:
  bool ancestor(Vertex v) const;
  void set_ancestor(Vertex v, bool on);
  void set_q(Vertex v);

  const AdjGraph& g_;
  const ParentArray& parents_;
  MarkMode mode_;
  BitArray q_, a_;
  TernaryArray t_;  // ternary mode: 0 neither, 1 ancestor, 2 marked
};

MarkArray mark_pass(const AdjGraph& g, const ParentArray& parents, MarkMode mode = MarkMode::separate,
                    BitMeter* meter = nullptr);

enum class BccKind { cut, bridge, bcc, tecc };

/// cut: one component holding the cut vertices; bridge: one component
/// holding the bridges; bcc / tecc: every component in turn. Isolated
/// vertices are zero-edge components.
void bcc_suite(const AdjGraph& g, BccKind which, OutputSelector output, ComponentSink& out,
               BitMeter* meter = nullptr);
/// Sorted.
std::vector<Vertex> cut_vertices(const AdjGraph& g);
/// In discovery order.
std::vector<Edge> bridges(const AdjGraph& g);

class UnknownEdgeError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Outputs the biconnected or 2-edge-connected component holding one edge
/// in time proportional to its size.
class ComponentQuery {
 public:
  ComponentQuery(const AdjGraph& g, BccKind kind);

  void query(Vertex x, Vertex y, OutputSelector output, ComponentSink& out);
  /// Steps taken by the last query (parent hops and slot visits).
  std::uint64_t last_work() const noexcept { return work_; }
  std::uint64_t bits() const noexcept;

 private:
  bool bridge_above(Vertex v) const { return bridge_.get(v); }

  const AdjGraph& g_;
  BccKind kind_;
  ParentArray parents_;
  BitArray q_;
  BitArray bridge_;  // parent edge of v is a bridge
  ChoiceDict slots_;  // per slot: traversal-relevant tree or lower-endpoint edge
  std::uint64_t work_ = 0;
};

}  // namespace sdfs
