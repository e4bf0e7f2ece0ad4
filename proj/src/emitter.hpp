#pragma once

#include "sdfs/components.hpp"
#include "sdfs/graph.hpp"

namespace sdfs::detail {

// Opens a component at its first item.
class Emitter {
 public:
  Emitter(ComponentSink& out, OutputSelector sel) : out_(out), sel_(sel) {}
  void vertex(Vertex v) {
    if (!want_vertices(sel_)) return;
    open();
    out_.vertex(v);
  }
  void edge(Vertex u, Vertex v) {
    if (!want_edges(sel_)) return;
    open();
    out_.edge(u, v);
  }
  void wrap() {
    if (open_) out_.end_component();
    open_ = false;
  }
  /// Zero-edge component of an isolated vertex.
  void isolated(Vertex v) {
    wrap();
    if (!want_vertices(sel_)) return;
    out_.begin_component();
    out_.vertex(v);
    out_.end_component();
  }

 private:
  void open() {
    if (!open_) out_.begin_component();
    open_ = true;
  }
  ComponentSink& out_;
  OutputSelector sel_;
  bool open_ = false;
};

inline Slot multiplicity(const AdjGraph& g, Vertex u, Vertex v) {
  Slot c = 0;
  for (Vertex x : g.neighbors(v)) c += x == u;
  return c;
}

}  // namespace sdfs::detail
