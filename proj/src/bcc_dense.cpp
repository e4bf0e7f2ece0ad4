#include <algorithm>
#include <stdexcept>

#include "emitter.hpp"
#include "sdfs/apps.hpp"

namespace sdfs {

MarkPass::MarkPass(const AdjGraph& g, const ParentArray& parents, MarkMode mode, BitMeter* meter)
    : g_(g), parents_(parents), mode_(mode) {
  if (g.directed()) throw ModeError("the marking pass needs an undirected graph");
  const Vertex n = g.n();
  if (mode == MarkMode::ternary) t_ = TernaryArray(n);
  else q_ = BitArray(n + 1);
  if (mode == MarkMode::separate) a_ = BitArray(n + 1);
  if (meter) {
    meter->set(meter->category("marks"), mode == MarkMode::ternary ? t_.bits() : q_.bits());
    if (mode == MarkMode::separate) meter->set(meter->category("ancestors"), a_.bits());
  }
}

bool MarkPass::q(Vertex v) const { return mode_ == MarkMode::ternary ? t_.read(v) == 2 : q_.get(v); }

bool MarkPass::ancestor(Vertex v) const {
  switch (mode_) {
    case MarkMode::fused: return q_.get(v);
    case MarkMode::ternary: return t_.read(v) != 0;
    default: return a_.get(v);
  }
}

void MarkPass::set_ancestor(Vertex v, bool on) {
  if (mode_ == MarkMode::separate) a_.set(v, on);
  else if (mode_ == MarkMode::ternary && t_.read(v) != 2) t_.write(v, on ? 1 : 0);
}

void MarkPass::set_q(Vertex v) {
  if (mode_ == MarkMode::ternary) t_.write(v, 2);
  else q_.set(v, true);
}

void MarkPass::run(const std::function<void(Vertex)>& on_arrive) {
  const auto& P = parents_;
  auto arrive = [&](Vertex x) {
    set_ancestor(x, true);
    const bool root = P.is_root(x);
    const Slot ps = root ? 0 : P.parent_slot(x);
    for (Slot i = 0; i < g_.deg(x); ++i) {
      if (!root && i == ps) continue;
      if (P.is_child_slot(x, i)) continue;
      Vertex y = g_.head(x, i);
      if (ancestor(y)) continue;
      // y is a descendant: mark the path up to, but excluding, the child of x
      for (Vertex z = y;;) {
        Vertex p = P.parent(z);
        if (p == x || q(z)) break;
        set_q(z);
        z = p;
      }
    }
    if (on_arrive) on_arrive(x);
    if (mode_ == MarkMode::fused) q_.set(x, true);
  };
  for (Vertex r = 1; r <= g_.n(); ++r) {
    if (!P.is_root(r)) continue;
    Vertex v = r;
    Slot i = 0;
    arrive(v);
    for (;;) {
      if (i < g_.deg(v)) {
        if (P.is_child_slot(v, i)) {
          v = g_.head(v, i);
          i = 0;
          arrive(v);
        } else {
          ++i;
        }
        continue;
      }
      set_ancestor(v, false);
      if (P.is_root(v)) break;
      Slot ps = P.parent_slot(v);
      Vertex u = g_.head(v, ps);
      i = g_.mate(v, ps) + 1;
      v = u;
    }
  }
}

MarkArray MarkPass::result() const {
  if (mode_ == MarkMode::fused) throw std::logic_error("fused marks are overwritten during the pass");
  std::vector<bool> out(g_.n() + 1, false);
  for (Vertex v = 1; v <= g_.n(); ++v) out[v] = q(v);
  return MarkArray(std::move(out));
}

MarkArray mark_pass(const AdjGraph& g, const ParentArray& parents, MarkMode mode, BitMeter* meter) {
  MarkPass mp(g, parents, mode, meter);
  mp.run();
  return mp.result();
}

namespace {

using detail::Emitter;
using detail::multiplicity;

// parent edge of c is a bridge
bool bridge_above(const AdjGraph& g, const ParentArray& P, const MarkPass& mp, Vertex c) {
  if (P.is_root(c) || mp.q(c)) return false;
  for (Slot i = 0; i < g.deg(c); ++i)
    if (P.is_child_slot(c, i) && mp.q(g.head(c, i))) return false;
  return multiplicity(g, P.parent(c), c) == 1;
}

bool has_nonbridge_edge(const AdjGraph& g, const ParentArray& P, const MarkPass& mp, Vertex v) {
  const bool root = P.is_root(v);
  for (Slot i = 0; i < g.deg(v); ++i) {
    if (!root && i == P.parent_slot(v)) {
      if (!bridge_above(g, P, mp, v)) return true;
    } else if (P.is_child_slot(v, i)) {
      if (!bridge_above(g, P, mp, g.head(v, i))) return true;
    } else {
      return true;
    }
  }
  return false;
}

// Visits F with the children of each vertex in two rounds; first(v, w)
// decides the round of child w. leave(w, u) runs on withdrawal from w to
// its parent u, leave(r, 0) at the end of a tree.
template <class First, class Leave>
void two_round_traversal(const AdjGraph& g, const ParentArray& P, BitArray* gray, First&& first, Leave&& leave,
                         Emitter& em) {
  for (Vertex r = 1; r <= g.n(); ++r) {
    if (!P.is_root(r)) continue;
    if (g.deg(r) == 0) {
      em.isolated(r);
      continue;
    }
    Vertex v = r;
    int round = 0;
    Slot i = 0;
    if (gray) gray->set(r, true);
    for (;;) {
      if (i < g.deg(v)) {
        if (P.is_child_slot(v, i)) {
          Vertex w = g.head(v, i);
          if (first(w) == (round == 0)) {
            if (gray) gray->set(w, true);
            v = w;
            round = 0;
            i = 0;
            continue;
          }
        }
        ++i;
        continue;
      }
      if (round == 0) {
        round = 1;
        i = 0;
        continue;
      }
      if (gray) gray->set(v, false);
      if (P.is_root(v)) {
        leave(v, 0);
        break;
      }
      Slot ps = P.parent_slot(v);
      Vertex u = g.head(v, ps);
      leave(v, u);
      round = first(v) ? 0 : 1;
      i = g.mate(v, ps) + 1;
      v = u;
    }
  }
}

}  // namespace

void bcc_suite(const AdjGraph& g, BccKind which, OutputSelector output, ComponentSink& out, BitMeter* meter) {
  if (g.directed()) throw ModeError("biconnectivity needs an undirected graph");
  ParentArray P = compute_parents(g, meter);
  if (which == BccKind::cut || which == BccKind::bridge) {
    MarkPass mp(g, P, MarkMode::fused, meter);
    std::vector<Vertex> cuts;
    std::vector<Edge> brs;
    mp.run([&](Vertex v) {
      if (which == BccKind::cut) {
        unsigned children = 0;
        bool false_child = false;
        for (Slot i = 0; i < g.deg(v); ++i) {
          if (!P.is_child_slot(v, i)) continue;
          ++children;
          false_child |= !mp.q(g.head(v, i));
        }
        if (false_child && (!P.is_root(v) || children >= 2)) cuts.push_back(v);
      } else if (bridge_above(g, P, mp, v)) {
        brs.push_back({P.parent(v), v});
      }
    });
    if (!cuts.empty() || !brs.empty()) {
      out.begin_component();
      for (Vertex v : cuts) out.vertex(v);
      for (auto [u, v] : brs) out.edge(u, v);
      out.end_component();
    }
    return;
  }

  const bool edges = want_edges(output);
  MarkPass mp(g, P, edges ? MarkMode::separate : MarkMode::ternary, meter);
  mp.run();
  BitArray gray(edges ? g.n() + 1 : 0);
  if (meter && edges) meter->set(meter->category("gray"), gray.bits());
  Emitter em(out, output);
  // edges of v towards gray ancestors, the tree edge included once
  auto lower_edges = [&](Vertex v, Vertex u, bool skip_tree) {
    if (!edges) return;
    const Slot ps = P.parent_slot(v);
    for (Slot j = 0; j < g.deg(v); ++j) {
      if (j == ps) {
        if (!skip_tree) em.edge(u, v);
      } else if (gray.get(g.head(v, j))) {
        em.edge(g.head(v, j), v);
      }
    }
  };

  // Emits the members below top whose tree edge passes member(c), each
  // with its lower edges; the path top..x is kept gray meanwhile.
  auto walk_class = [&](Vertex top, auto&& member) {
    if (edges) gray.set(top, true);
    Vertex x = top;
    Slot i = 0;
    for (;;) {
      if (i < g.deg(x)) {
        if (P.is_child_slot(x, i) && member(g.head(x, i))) {
          Vertex c = g.head(x, i);
          lower_edges(c, x, false);
          em.vertex(c);
          if (edges) gray.set(c, true);
          x = c;
          i = 0;
        } else {
          ++i;
        }
        continue;
      }
      if (edges) gray.set(x, false);
      if (x == top) break;
      Slot ps = P.parent_slot(x);
      i = g.mate(x, ps) + 1;
      x = g.head(x, ps);
    }
  };

  if (which == BccKind::bcc) {
    two_round_traversal(
        g, P, edges ? &gray : nullptr, [&](Vertex w) { return !mp.q(w); },
        [&](Vertex w, Vertex v) {
          if (v == 0 || mp.q(w)) return;
          lower_edges(w, v, false);
          em.vertex(w);
          walk_class(w, [&](Vertex c) { return mp.q(c); });
          em.vertex(v);
          em.wrap();
        },
        em);
  } else {
    two_round_traversal(
        g, P, edges ? &gray : nullptr, [&](Vertex w) { return bridge_above(g, P, mp, w); },
        [&](Vertex w, Vertex v) {
          const bool bridge = v != 0 && bridge_above(g, P, mp, w);
          if (v != 0 && !bridge) return;
          if (has_nonbridge_edge(g, P, mp, w)) {
            em.vertex(w);
            walk_class(w, [&](Vertex c) { return !bridge_above(g, P, mp, c); });
            em.wrap();
          }
          if (bridge) {
            em.vertex(v);
            em.vertex(w);
            em.edge(v, w);
            em.wrap();
          }
        },
        em);
  }
  em.wrap();
}

std::vector<Vertex> cut_vertices(const AdjGraph& g) {
  CollectingSink s;
  bcc_suite(g, BccKind::cut, OutputSelector::vertices, s);
  if (s.components.empty()) return {};
  auto out = std::move(s.components[0].vertices);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> bridges(const AdjGraph& g) {
  CollectingSink s;
  bcc_suite(g, BccKind::bridge, OutputSelector::edges, s);
  return s.components.empty() ? std::vector<Edge>{} : s.components[0].edges;
}

}  // namespace sdfs
