#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdfs/bit_meter.hpp"
#include "sdfs/graph.hpp"

namespace sdfs {

/// Extra data passed with a back-edge event. `turn` is the value of the
/// turn counter when the edge was looked at; `parent` is set for the last
/// turn of a non-root vertex in an undirected graph, which leads back over
/// the tree edge to the parent.
struct BackEdge {
  Slot slot;
  Slot turn;
  bool parent;
};

/// User procedures run by every traversal. Slots are positions in the
/// adjacency array of the first vertex argument.
class DfsEvents {
 public:
  virtual ~DfsEvents() = default;
  virtual void preprocess(Vertex) {}
  virtual void postprocess(Vertex) {}
  virtual void explore_tree_edge(Vertex, Vertex, Slot) {}
  virtual void retreat_tree_edge(Vertex, Vertex, Slot) {}
  virtual void handle_back_edge(Vertex, Vertex, const BackEdge&) {}
};

struct Event {
  enum class Kind : std::uint8_t { pre, post, tree, retreat, back };
  Kind kind;
  Vertex a;
  Vertex b = 0;
  bool parent = false;
  friend bool operator==(const Event&, const Event&) = default;
};

/// "pre v", "post v", "tree u v", "retreat u v", "back u v" and
/// "back u v (parent)".
std::string format_event(const Event& e);

class EventRecorder : public DfsEvents {
 public:
  void preprocess(Vertex v) override { events.push_back({Event::Kind::pre, v}); }
  void postprocess(Vertex v) override { events.push_back({Event::Kind::post, v}); }
  void explore_tree_edge(Vertex v, Vertex w, Slot) override {
    events.push_back({Event::Kind::tree, v, w});
  }
  void retreat_tree_edge(Vertex u, Vertex v, Slot) override {
    events.push_back({Event::Kind::retreat, u, v});
  }
  void handle_back_edge(Vertex v, Vertex w, const BackEdge& e) override {
    events.push_back({Event::Kind::back, v, w, e.parent});
  }
  std::vector<Event> events;
};

/// Counters and the space audit of one traversal.
struct DfsStats {
  BitMeter meter;
  std::uint64_t inspections = 0;  // adjacency slots read (head or mate)
  std::uint64_t stack_peak_bits = 0;
  std::uint64_t restorations = 0;
  std::uint64_t splits = 0;
  std::uint64_t joins = 0;
  std::uint64_t drops = 0;
  std::uint64_t segments = 0;       // segments ever started
  std::uint64_t hues_used = 0;      // largest hue assigned, plus one
  std::uint64_t split_join_vertices = 0;  // vertices touched by split and join walks
  std::uint64_t restore_vertices = 0;     // vertices touched by restoration walks

  std::string to_json() const;
};

enum class DenseVariant { plain, grouped };

/// Bits for one register able to hold a vertex or a slot of g.
unsigned register_width(const AdjGraph& g);

/// The traversal with one turn value per internal gray vertex of degree
/// at least 3. The grouped variant packs degree-4, -6 and -7 entries.
DfsStats dfs_dense(const AdjGraph& g, DfsEvents& events, DenseVariant variant = DenseVariant::plain);

/// parent[v] is 0 for roots. Index 0 is unused.
std::vector<Vertex> dfs_forest_parents(const AdjGraph& g, DenseVariant variant = DenseVariant::plain);

}  // namespace sdfs
