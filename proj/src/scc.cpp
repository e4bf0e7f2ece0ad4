#include <algorithm>

#include "sdfs/apps.hpp"
#include "sdfs/bit_stack.hpp"
#include "sdfs/dfs.hpp"

namespace sdfs {

namespace {

std::vector<unsigned> parent_widths(const AdjGraph& g) {
  std::vector<unsigned> w(g.n());
  for (Vertex v = 1; v <= g.n(); ++v) w[v - 1] = bit_length(g.directed() ? g.indeg(v) : g.deg(v));
  return w;
}

}  // namespace

ParentArray::ParentArray(const AdjGraph& g) : g_(&g) {
  auto w = parent_widths(g);
  refs_ = StaticAllocArray(w);
  for (Vertex v = 1; v <= g.n(); ++v) set_root(v);
}

ParentArray compute_parents(const AdjGraph& g, BitMeter* meter) {
  ParentArray P(g);
  BitArray white(g.n() + 1);
  white.fill(true);
  for (Vertex r = 1; r <= g.n(); ++r) {
    if (!white.get(r)) continue;
    white.set(r, false);
    Vertex v = r;
    Slot i = 0;
    for (;;) {
      if (i < g.deg(v)) {
        Vertex w = g.head(v, i);
        if (g.outgoing(v, i) && white.get(w)) {
          white.set(w, false);
          P.set_parent_slot(w, g.mate(v, i));
          v = w;
          i = 0;
        } else {
          ++i;
        }
        continue;
      }
      if (P.is_root(v)) break;
      Slot ps = P.parent_slot(v);
      Vertex u = g.head(v, ps);
      i = g.mate(v, ps) + 1;
      v = u;
    }
  }
  if (meter) {
    meter->set(meter->category("parents"), P.bits());
    meter->set(meter->category("parent_white"), white.bits());
  }
  return P;
}

namespace {

// One tree of the cyclic-order traversal. Forward scans outgoing slots, reverse
// scans incoming ones. Hooks see every slot except the parent slot.
template <class Hooks>
void cyclic_tree(const AdjGraph& g, Vertex r, bool reverse, GroupedStack& S, Hooks& h) {
  Vertex v = r;
  std::int64_t k = -1, l = -1, l0 = 0;
  h.discover(r);
  for (;;) {
    ++l;
    const std::int64_t d = g.deg(v);
    if (l < d) {
      Slot s = static_cast<Slot>(((k + l + 1) % d + d) % d);
      Vertex w = g.head(v, s);
      if (g.outgoing(v, s) == reverse) {
        if (v == r || l != d - 1) h.skip(v, s, w);
        continue;
      }
      if (!h.white(w)) {
        h.skip(v, s, w);
        continue;
      }
      h.tree(v, s, w);
      if (v == r) l0 = l;
      else if (d > 2) S.push(static_cast<std::uint64_t>(l), static_cast<Slot>(d));
      h.stack(S.size_bits());
      k = g.mate(v, s);
      l = -1;
      v = w;
      h.discover(w);
      continue;
    }
    if (v == r) break;
    Slot ks = static_cast<Slot>(k);
    Vertex u = g.head(v, ks);
    const std::int64_t du = g.deg(u);
    if (u == r) l = l0;
    else if (du <= 2) l = 0;
    else l = static_cast<std::int64_t>(S.pop(static_cast<Slot>(du)));
    k = ((static_cast<std::int64_t>(g.mate(v, ks)) - (l + 1)) % du + du) % du;
    h.withdraw(v, u);
    v = u;
  }
}

struct MeterSet {
  BitMeter* m;
  void set(const char* name, std::uint64_t bits) {
    if (m) m->set(m->category(name), bits);
  }
};

}  // namespace

namespace {

// Reads the Euler record backwards and yields the vertices in reverse
// postorder of the first search. A '1' on an incoming slot is the
// discovery bit of the current vertex, so no per-vertex entry slot needs
// to be remembered.
template <class IsRoot>
class EulerWalk {
 public:
  EulerWalk(const AdjGraph& g, const BitArray& B, std::uint64_t len, IsRoot is_root)
      : g_(g), B_(B), pos_(len), is_root_(is_root), r_(g.n() + 1) {}

  Vertex next() {
    entered_root_ = false;
    for (;;) {
      if (v_ == 0) {
        Vertex r = r_;
        do --r;
        while (r >= 1 && !is_root_(r));
        if (r == 0) return 0;
        r_ = v_ = r;
        j_ = static_cast<std::int64_t>(g_.deg(r)) - 1;
        entered_root_ = true;
        return r;
      }
      if (v_ == r_ && j_ < 0) {
        v_ = 0;
        continue;
      }
      const std::int64_t d = g_.deg(v_);
      Slot s = static_cast<Slot>((j_ % d + d) % d);
      if (!B_.get(--pos_)) {
        --j_;
        continue;
      }
      const bool down = g_.outgoing(v_, s);
      Vertex w = g_.head(v_, s);
      j_ = static_cast<std::int64_t>(g_.mate(v_, s)) - 1;
      v_ = w;
      if (down) return w;
    }
  }
  bool entered_root() const noexcept { return entered_root_; }

 private:
  const AdjGraph& g_;
  const BitArray& B_;
  std::uint64_t pos_;
  IsRoot is_root_;
  Vertex r_;
  Vertex v_ = 0;
  std::int64_t j_ = 0;
  bool entered_root_ = false;
};

}  // namespace

namespace {

// Lexicographic counterpart driven by parent references alone.
class ParentWalk {
 public:
  explicit ParentWalk(const ParentArray& P) : P_(P), g_(P.graph()), r_(g_.n() + 1) {}

  Vertex next() {
    entered_root_ = false;
    for (;;) {
      if (v_ == 0) {
        Vertex r = r_;
        do --r;
        while (r >= 1 && !P_.is_root(r));
        if (r == 0) return 0;
        r_ = v_ = r;
        j_ = static_cast<std::int64_t>(g_.deg(r)) - 1;
        entered_root_ = true;
        return r;
      }
      if (j_ < 0) {
        if (v_ == r_) {
          v_ = 0;
          continue;
        }
        Slot ps = P_.parent_slot(v_);
        Vertex u = g_.head(v_, ps);
        j_ = static_cast<std::int64_t>(g_.mate(v_, ps)) - 1;
        v_ = u;
        continue;
      }
      Slot s = static_cast<Slot>(j_--);
      if (P_.is_child_slot(v_, s)) {
        v_ = g_.head(v_, s);
        j_ = static_cast<std::int64_t>(g_.deg(v_)) - 1;
        return v_;
      }
    }
  }
  bool entered_root() const noexcept { return entered_root_; }

 private:
  const ParentArray& P_;
  const AdjGraph& g_;
  Vertex r_;
  Vertex v_ = 0;
  std::int64_t j_ = 0;
  bool entered_root_ = false;
};

struct Codes {
  unsigned white, current, old;
};

// Second phase: DFS of the reversed graph with roots supplied by the walk.
template <class Walk>
void reverse_phase(const AdjGraph& g, Walk& walk, TernaryArray& c, Codes codes, GroupedStack& S,
                   ComponentSink& out, const SccOptions& opt, std::uint64_t& stack_peak) {
  struct Hooks {
    TernaryArray& c;
    Codes codes;
    ComponentSink& out;
    const SccOptions& opt;
    std::uint64_t& peak;
    bool recolor = false;
    bool white(Vertex w) const { return c.read(w) == (recolor ? codes.current : codes.white); }
    void discover(Vertex w) {
      if (recolor) {
        c.write(w, codes.old);
        return;
      }
      c.write(w, opt.with_edges ? codes.current : codes.old);
      out.vertex(w);
    }
    void skip(Vertex v, Slot s, Vertex w) {
      if (recolor || !opt.with_edges || g_out(v, s)) return;
      if (c.read(w) == codes.current) out.edge(w, v);
      else if (opt.inter_component) opt.inter_component->push_back({w, v});
    }
    void tree(Vertex v, Slot, Vertex w) {
      if (!recolor && opt.with_edges) out.edge(w, v);
    }
    void withdraw(Vertex, Vertex) {}
    void stack(std::uint64_t bits) { peak = std::max(peak, bits); }
    const AdjGraph* gp = nullptr;
    bool g_out(Vertex v, Slot s) const { return gp->outgoing(v, s); }
  };
  Hooks h{c, codes, out, opt, stack_peak};
  h.gp = &g;
  for (Vertex v = walk.next(); v != 0; v = walk.next()) {
    if (!walk.entered_root() && c.read(v) != codes.white) continue;
    out.begin_component();
    h.recolor = false;
    cyclic_tree(g, v, true, S, h);
    if (opt.with_edges) {
      h.recolor = true;
      cyclic_tree(g, v, true, S, h);
    }
    out.end_component();
  }
}

}  // namespace

void scc_euler(const AdjGraph& g, ComponentSink& out, SccOptions opt) {
  if (!g.directed()) throw ModeError("strongly connected components need a directed graph");
  const Vertex n = g.n();
  // first search: 0 white, 1 reached, 2 root; second search: 1 white,
  // 0 in the current tree, 2 in an older tree (or an unreached root)
  TernaryArray c(n);
  BitArray B(std::max<std::uint64_t>(1, 2 * g.m()));
  std::uint64_t pos = 0, peak = 0;
  GroupedStack S;
  struct Forward {
    TernaryArray& c;
    BitArray& B;
    std::uint64_t& pos;
    std::uint64_t& peak;
    Vertex root = 0;
    bool white(Vertex w) const { return c.read(w) == 0; }
    void discover(Vertex w) { c.write(w, w == root ? 2 : 1); }
    void skip(Vertex, Slot, Vertex) { B.set(pos++, false); }
    void tree(Vertex, Slot, Vertex) { B.set(pos++, true); }
    void withdraw(Vertex, Vertex) { B.set(pos++, true); }
    void stack(std::uint64_t bits) { peak = std::max(peak, bits); }
  } fwd{c, B, pos, peak};
  for (Vertex r = 1; r <= n; ++r) {
    if (c.read(r) != 0) continue;
    fwd.root = r;
    cyclic_tree(g, r, false, S, fwd);
  }
  if (pos != 2 * g.m()) throw std::logic_error("Euler record has the wrong length");
  auto is_root = [&c](Vertex x) { return c.read(x) == 2; };
  EulerWalk<decltype(is_root)> walk(g, B, pos, is_root);
  reverse_phase(g, walk, c, Codes{1, 0, 2}, S, out, opt, peak);
  MeterSet m{opt.meter};
  m.set("colors", c.bits());
  m.set("euler_record", 2 * g.m());
  m.set("turn_stack", peak);
  m.set("registers", 10ull * register_width(g));
}

void scc_parent(const AdjGraph& g, ComponentSink& out, SccOptions opt) {
  if (!g.directed()) throw ModeError("strongly connected components need a directed graph");
  ParentArray P = compute_parents(g, opt.meter);
  TernaryArray c(g.n());
  GroupedStack S;
  std::uint64_t peak = 0;
  ParentWalk walk(P);
  reverse_phase(g, walk, c, Codes{0, 1, 2}, S, out, opt, peak);
  MeterSet m{opt.meter};
  m.set("colors", c.bits());
  m.set("turn_stack", peak);
  m.set("registers", 10ull * register_width(g));
}

}  // namespace sdfs
