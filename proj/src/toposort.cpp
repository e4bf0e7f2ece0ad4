#include "sdfs/apps.hpp"

namespace sdfs {

std::vector<Vertex> toposort(const AdjGraph& g, BitMeter* meter) {
  if (!g.directed()) throw ModeError("topological sorting needs a directed graph");
  const Vertex n = g.n();
  // residual indegree r of a vertex with original indegree d >= 1 is kept
  // as r - 1 in ceil(log2 d) bits while r >= 1
  std::vector<unsigned> widths(n);
  for (Vertex v = 1; v <= n; ++v) widths[v - 1] = ceil_log2(g.indeg(v));
  StaticAllocArray residual(widths);
  ChoiceDict zero(n);
  BitArray done(n + 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (g.indeg(v) == 0) zero.insert(v);
    else residual.write(v, g.indeg(v) - 1);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!zero.empty()) {
    Vertex u = static_cast<Vertex>(zero.choice());
    zero.erase(u);
    done.set(u, true);
    order.push_back(u);
    for (Slot i = 0; i < g.outdeg(u); ++i) {
      Vertex w = g.head(u, i);
      std::uint64_t r = residual.read(w);
      if (r == 0) zero.insert(w);
      else residual.write(w, r - 1);
    }
  }
  if (meter) {
    meter->set(meter->category("zero_indegree_set"), zero.bits());
    meter->set(meter->category("residual_indegrees"), residual.bits());
    meter->set(meter->category("done"), done.bits());
  }
  if (order.size() != n) {
    for (Vertex v = 1; v <= n; ++v)
      if (!done.get(v)) throw CyclicGraphError(v);
  }
  return order;
}

}  // namespace sdfs
