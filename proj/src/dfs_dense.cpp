#include <algorithm>

#include "json.hpp"
#include "sdfs/bit_stack.hpp"
#include "sdfs/dfs.hpp"
#include "sdfs/packed.hpp"

namespace sdfs {

std::string format_event(const Event& e) {
  switch (e.kind) {
    case Event::Kind::pre: return "pre " + std::to_string(e.a);
    case Event::Kind::post: return "post " + std::to_string(e.a);
    case Event::Kind::tree: return "tree " + std::to_string(e.a) + " " + std::to_string(e.b);
    case Event::Kind::retreat: return "retreat " + std::to_string(e.a) + " " + std::to_string(e.b);
    case Event::Kind::back:
      return "back " + std::to_string(e.a) + " " + std::to_string(e.b) + (e.parent ? " (parent)" : "");
  }
  return {};
}

std::string DfsStats::to_json() const {
  nlohmann::ordered_json j;
  j["bits"] = nlohmann::ordered_json::parse(meter.to_json());
  j["inspections"] = inspections;
  j["stack_peak_bits"] = stack_peak_bits;
  j["restorations"] = restorations;
  j["splits"] = splits;
  j["joins"] = joins;
  j["drops"] = drops;
  j["segments"] = segments;
  j["hues_used"] = hues_used;
  j["split_join_vertices"] = split_join_vertices;
  j["restore_vertices"] = restore_vertices;
  return j.dump();
}

unsigned register_width(const AdjGraph& g) {
  std::uint64_t maxdeg = 0;
  for (Vertex v = 1; v <= g.n(); ++v) maxdeg = std::max<std::uint64_t>(maxdeg, g.deg(v));
  return std::max(1u, bit_length(std::max<std::uint64_t>(g.n(), maxdeg) + 1));
}

namespace {

template <class Stack>
void run(const AdjGraph& g, DfsEvents& ev, Stack& S, DfsStats& st) {
  const Vertex n = g.n();
  BitArray white(n);
  white.fill(true);
  auto& meter = st.meter;
  auto h_white = meter.category("white");
  auto h_regs = meter.category("registers");
  auto h_stack = meter.category("turn_stack");
  meter.set(h_white, white.bits());
  // v, k, l, root, l0, w, u and the root loop counter
  meter.set(h_regs, 8ull * register_width(g));
  std::uint64_t inspections = 0;

  for (Vertex r = 1; r <= n; ++r) {
    if (!white.get(r)) continue;
    Vertex root = r, v = r;
    // k == -1 at the root; kept as a signed value
    std::int64_t k = -1, l = -1, l0 = 0;
    white.set(v, false);
    ev.preprocess(v);
    for (;;) {
      ++l;
      const std::int64_t d = g.deg(v);
      if (l < d) {
        Slot s = static_cast<Slot>(((k + l + 1) % d + d) % d);
        if (!g.outgoing(v, s)) continue;
        ++inspections;
        Vertex w = g.head(v, s);
        if (white.get(w)) {
          ev.explore_tree_edge(v, w, s);
          if (v == root) l0 = l;
          else if (d > 2) {
            S.push(static_cast<std::uint64_t>(l), static_cast<Slot>(d));
            meter.set(h_stack, S.size_bits());
          }
          k = g.mate(v, s);
          l = -1;
          v = w;
          white.set(v, false);
          ev.preprocess(v);
        } else {
          ev.handle_back_edge(v, w, {s, static_cast<Slot>(l), !g.directed() && v != root && l == d - 1});
        }
      } else {
        if (v == root) break;
        ++inspections;
        Slot ks = static_cast<Slot>(k);
        Vertex u = g.head(v, ks);
        const std::int64_t du = g.deg(u);
        if (u == root) l = l0;
        else if (du <= 2) l = 0;
        else {
          l = static_cast<std::int64_t>(S.pop(static_cast<Slot>(du)));
          meter.set(h_stack, S.size_bits());
        }
        k = ((static_cast<std::int64_t>(g.mate(v, ks)) - (l + 1)) % du + du) % du;
        ev.postprocess(v);
        ev.retreat_tree_edge(u, v, static_cast<Slot>((k + l + 1) % du));
        v = u;
      }
    }
    ev.postprocess(v);
  }
  st.inspections = inspections;
  st.stack_peak_bits = S.peak_bits();
}

}  // namespace

DfsStats dfs_dense(const AdjGraph& g, DfsEvents& events, DenseVariant variant) {
  DfsStats st;
  if (variant == DenseVariant::grouped) {
    GroupedStack S;
    run(g, events, S, st);
  } else {
    BitStack S;
    run(g, events, S, st);
  }
  return st;
}

namespace {

class ParentCollector : public DfsEvents {
 public:
  explicit ParentCollector(Vertex n) : parent(n + 1, 0) {}
  void explore_tree_edge(Vertex v, Vertex w, Slot) override { parent[w] = v; }
  std::vector<Vertex> parent;
};

}  // namespace

std::vector<Vertex> dfs_forest_parents(const AdjGraph& g, DenseVariant variant) {
  ParentCollector c(g.n());
  dfs_dense(g, c, variant);
  return c.parent;
}

}  // namespace sdfs
