#include "sdfs/apps.hpp"

namespace sdfs {

ComponentQuery::ComponentQuery(const AdjGraph& g, BccKind kind)
    : g_(g),
      kind_(kind),
      parents_(compute_parents(g)),
      q_(g.n() + 1),
      bridge_(g.n() + 1),
      slots_(std::max<std::uint64_t>(1, g.slot_count())) {
  if (g.directed()) throw ModeError("component queries need an undirected graph");
  if (kind != BccKind::bcc && kind != BccKind::tecc) throw std::invalid_argument("query kind must be bcc or tecc");
  const auto& P = parents_;
  MarkPass mp(g, P, MarkMode::separate);
  mp.run();
  for (Vertex v = 1; v <= g.n(); ++v) q_.set(v, mp.q(v));
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (P.is_root(v) || q_.get(v)) continue;
    bool ok = true;
    for (Slot i = 0; i < g.deg(v) && ok; ++i)
      if (P.is_child_slot(v, i) && q_.get(g.head(v, i))) ok = false;
    Slot mult = 0;
    for (Vertex x : g.neighbors(v)) mult += x == P.parent(v);
    bridge_.set(v, ok && mult == 1);
  }
  // a preorder pass with gray marks tells ancestors apart
  BitArray gray(g.n() + 1);
  auto member = [&](Vertex u, Slot i) { slots_.insert(g.slot_index(u, i) + 1); };
  auto arrive = [&](Vertex u) {
    gray.set(u, true);
    const bool root = P.is_root(u);
    for (Slot i = 0; i < g.deg(u); ++i) {
      Vertex w = g.head(u, i);
      if (!root && i == P.parent_slot(u)) {
        if (kind == BccKind::bcc || !bridge_.get(u)) member(u, i);
      } else if (P.is_child_slot(u, i)) {
        if (kind == BccKind::bcc ? q_.get(w) : !bridge_.get(w)) member(u, i);
      } else if (gray.get(w)) {
        member(u, i);
      }
    }
  };
  for (Vertex r = 1; r <= g.n(); ++r) {
    if (!P.is_root(r)) continue;
    Vertex v = r;
    Slot i = 0;
    arrive(v);
    for (;;) {
      if (i < g.deg(v)) {
        if (P.is_child_slot(v, i)) {
          v = g.head(v, i);
          i = 0;
          arrive(v);
        } else {
          ++i;
        }
        continue;
      }
      gray.set(v, false);
      if (P.is_root(v)) break;
      Slot ps = P.parent_slot(v);
      Vertex u = g.head(v, ps);
      i = g.mate(v, ps) + 1;
      v = u;
    }
  }
}

std::uint64_t ComponentQuery::bits() const noexcept {
  return parents_.bits() + q_.bits() + bridge_.bits() + slots_.bits();
}

void ComponentQuery::query(Vertex x, Vertex y, OutputSelector output, ComponentSink& out) {
  const auto& P = parents_;
  work_ = 0;
  auto unknown = [&] {
    return UnknownEdgeError("no edge {" + std::to_string(x) + "," + std::to_string(y) + "} in the graph");
  };
  if (x < 1 || y < 1 || x > g_.n() || y > g_.n() || x == y) throw unknown();
  // climb from both ends in parallel to find the lower endpoint
  Vertex lower = 0;
  for (Vertex ax = x, ay = y;;) {
    ++work_;
    if (ax == y) { lower = x; break; }
    if (ay == x) { lower = y; break; }
    const bool rx = P.is_root(ax), ry = P.is_root(ay);
    if (rx && ry) throw unknown();
    if (rx) { lower = y; break; }
    if (ry) { lower = x; break; }
    ax = P.parent(ax);
    ay = P.parent(ay);
  }
  const Vertex upper = lower == x ? y : x;
  auto base = [&](Vertex u) { return g_.slot_index(u, 0) + 1; };
  auto next_member = [&](Vertex u, std::uint64_t pos) -> std::int64_t {
    ++work_;
    std::uint64_t j = slots_.next(pos);
    if (j == 0 || j >= base(u) + g_.deg(u)) return -1;
    return static_cast<std::int64_t>(j - base(u));
  };
  bool exists = P.parent(lower) == upper;
  for (std::int64_t i = next_member(lower, base(lower)); !exists && i >= 0;
       i = next_member(lower, base(lower) + static_cast<std::uint64_t>(i) + 1))
    exists = g_.head(lower, static_cast<Slot>(i)) == upper;
  if (!exists) throw unknown();

  out.begin_component();
  auto vertex = [&](Vertex v) {
    if (want_vertices(output)) out.vertex(v);
  };
  auto edge = [&](Vertex u, Vertex v) {
    if (want_edges(output)) out.edge(u, v);
  };
  if (kind_ == BccKind::tecc && P.parent(lower) == upper && bridge_.get(lower)) {
    vertex(upper);
    vertex(lower);
    edge(upper, lower);
    out.end_component();
    return;
  }
  Vertex t = lower;
  if (kind_ == BccKind::bcc) {
    while (q_.get(t)) {
      ++work_;
      t = P.parent(t);
    }
    vertex(P.parent(t));
  } else {
    while (!P.is_root(t) && !bridge_.get(t)) {
      ++work_;
      t = P.parent(t);
    }
  }
  Vertex u = t;
  std::uint64_t pos = base(u);
  vertex(u);
  for (;;) {
    std::int64_t i = next_member(u, pos);
    if (i >= 0) {
      Slot s = static_cast<Slot>(i);
      Vertex w = g_.head(u, s);
      if (P.is_child_slot(u, s)) {
        u = w;
        pos = base(u);
        vertex(u);
      } else {
        edge(w, u);
        pos = base(u) + s + 1;
      }
      continue;
    }
    if (u == t) break;
    Slot ps = P.parent_slot(u);
    Vertex p = g_.head(u, ps);
    pos = base(p) + g_.mate(u, ps) + 1;
    u = p;
  }
  out.end_component();
}

}  // namespace sdfs
