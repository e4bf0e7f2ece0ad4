#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "sdfs/harness.hpp"

namespace sdfs::harness {

namespace {

struct Dsu {
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
  std::vector<std::size_t> p;
};

/// Components of the undirected multigraph with one vertex and/or edge
/// excluded; returns a label per vertex (0 for the excluded vertex).
std::vector<std::size_t> labels_without(const AdjGraph& g, Vertex skip_v, std::size_t skip_e,
                                        std::size_t* count) {
  Dsu d(g.n() + 1);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == skip_e) continue;
    auto [u, v] = edges[i];
    if (u == skip_v || v == skip_v) continue;
    d.unite(u, v);
  }
  std::vector<std::size_t> label(g.n() + 1, 0);
  std::size_t c = 0;
  std::vector<std::size_t> id(g.n() + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (v == skip_v) continue;
    auto r = d.find(v);
    if (id[r] == 0) id[r] = ++c;
    label[v] = id[r];
  }
  if (count) *count = c;
  return label;
}

std::vector<Component> classes_to_components(const AdjGraph& g, Dsu& d) {
  const auto& edges = g.edges();
  std::vector<std::vector<std::size_t>> groups(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) groups[d.find(i)].push_back(i);
  std::vector<Component> out;
  std::vector<bool> touched(g.n() + 1, false);
  for (const auto& grp : groups) {
    if (grp.empty()) continue;
    Component c;
    for (auto i : grp) {
      c.edges.push_back(edges[i]);
      for (Vertex x : {edges[i].first, edges[i].second}) {
        touched[x] = true;
        if (std::find(c.vertices.begin(), c.vertices.end(), x) == c.vertices.end()) c.vertices.push_back(x);
      }
    }
    out.push_back(std::move(c));
  }
  for (Vertex v = 1; v <= g.n(); ++v)
    if (!touched[v]) out.push_back(Component{{v}, {}});
  canonicalize(out);
  return out;
}

void need_undirected(const AdjGraph& g) {
  if (g.directed()) throw std::invalid_argument("oracle needs an undirected graph");
}

}  // namespace

std::vector<Event> oracle_dfs_events(const AdjGraph& g) {
  struct Frame {
    Vertex v;
    Slot entry;  // slot at v of the parent edge
    Slot next;   // number of turns taken
    bool root;
  };
  std::vector<Event> ev;
  std::vector<bool> seen(g.n() + 1, false);
  std::vector<Frame> st;
  for (Vertex r = 1; r <= g.n(); ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    ev.push_back({Event::Kind::pre, r});
    st.push_back({r, 0, 0, true});
    while (!st.empty()) {
      Frame& f = st.back();
      Slot d = g.deg(f.v);
      if (f.next < d) {
        Slot turn = f.next++;
        Slot s = f.root ? turn : (f.entry + 1 + turn) % d;
        if (g.directed() && s >= g.outdeg(f.v)) continue;
        Vertex w = g.head(f.v, s);
        if (!seen[w]) {
          seen[w] = true;
          ev.push_back({Event::Kind::tree, f.v, w});
          ev.push_back({Event::Kind::pre, w});
          st.push_back({w, g.mate(f.v, s), 0, false});
        } else {
          bool parent = !g.directed() && !f.root && turn == d - 1;
          ev.push_back({Event::Kind::back, f.v, w, parent});
        }
      } else {
        Vertex v = f.v;
        st.pop_back();
        ev.push_back({Event::Kind::post, v});
        if (!st.empty()) ev.push_back({Event::Kind::retreat, st.back().v, v});
      }
    }
  }
  return ev;
}

Partition tarjan_scc(const AdjGraph& g) {
  const Vertex n = g.n();
  std::vector<std::uint32_t> index(n + 1, 0), low(n + 1, 0);
  std::vector<bool> on(n + 1, false);
  std::vector<Vertex> stack;
  std::uint32_t counter = 0;
  Partition out;
  struct Frame {
    Vertex v;
    Slot i;
  };
  for (Vertex s = 1; s <= n; ++s) {
    if (index[s]) continue;
    std::vector<Frame> call{{s, 0}};
    index[s] = low[s] = ++counter;
    stack.push_back(s);
    on[s] = true;
    while (!call.empty()) {
      auto& f = call.back();
      Vertex v = f.v;
      if (f.i < g.outdeg(v)) {
        Vertex w = g.head(v, f.i++);
        if (!index[w]) {
          index[w] = low[w] = ++counter;
          stack.push_back(w);
          on[w] = true;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<Vertex> comp;
          Vertex x;
          do {
            x = stack.back();
            stack.pop_back();
            on[x] = false;
            comp.push_back(x);
          } while (x != v);
          out.push_back(std::move(comp));
        }
      }
    }
  }
  canonicalize(out);
  return out;
}

Partition reachability_scc(const AdjGraph& g) {
  const Vertex n = g.n();
  if (n > 30) throw OracleLimit("reachability oracle limited to n <= 30");
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(n + 1, false));
  for (Vertex s = 1; s <= n; ++s) {
    std::queue<Vertex> q;
    q.push(s);
    reach[s][s] = true;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Slot i = 0; i < g.outdeg(u); ++i) {
        Vertex w = g.head(u, i);
        if (!reach[s][w]) {
          reach[s][w] = true;
          q.push(w);
        }
      }
    }
  }
  Partition out;
  std::vector<bool> placed(n + 1, false);
  for (Vertex u = 1; u <= n; ++u) {
    if (placed[u]) continue;
    std::vector<Vertex> c;
    for (Vertex v = u; v <= n; ++v)
      if (reach[u][v] && reach[v][u]) {
        placed[v] = true;
        c.push_back(v);
      }
    out.push_back(c);
  }
  canonicalize(out);
  return out;
}

std::vector<Vertex> removal_cut_vertices(const AdjGraph& g) {
  need_undirected(g);
  if (g.n() > 50) throw OracleLimit("removal oracle limited to n <= 50");
  std::size_t base;
  labels_without(g, 0, SIZE_MAX, &base);
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.n(); ++v) {
    std::size_t c;
    labels_without(g, v, SIZE_MAX, &c);
    if (c > base) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> removal_bridges(const AdjGraph& g) {
  need_undirected(g);
  if (g.n() > 50) throw OracleLimit("removal oracle limited to n <= 50");
  std::size_t base;
  labels_without(g, 0, SIZE_MAX, &base);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.m(); ++i) {
    std::size_t c;
    labels_without(g, 0, i, &c);
    if (c > base) out.push_back(i);
  }
  return out;
}

std::vector<bool> exhaustive_p(const AdjGraph& g, const std::vector<Vertex>& parent) {
  need_undirected(g);
  const Vertex n = g.n();
  // anc[x][y]: y is an ancestor of x or x itself
  std::vector<std::vector<bool>> anc(n + 1, std::vector<bool>(n + 1, false));
  for (Vertex x = 1; x <= n; ++x)
    for (Vertex y = x; y != 0; y = parent[y]) anc[x][y] = true;
  std::vector<bool> p(n + 1, false);
  for (Vertex w = 1; w <= n; ++w) {
    Vertex v = parent[w];
    if (v == 0) continue;
    for (const auto& [a, b] : g.edges()) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        // x descendant of w, y proper ancestor of v
        if (anc[x][w] && anc[v][y] && y != v) p[w] = true;
      }
    }
  }
  return p;
}

std::vector<Component> cycle_bccs(const AdjGraph& g) {
  need_undirected(g);
  if (g.n() > 12 || g.m() > 24) throw OracleLimit("cycle enumeration limited to n <= 12, m <= 24");
  const auto& edges = g.edges();
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(g.n() + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].first].push_back({edges[i].second, i});
    adj[edges[i].second].push_back({edges[i].first, i});
  }
  Dsu d(edges.size());
  std::vector<bool> on_path(g.n() + 1, false);
  std::vector<std::size_t> path_edges;
  Vertex start = 0;
  std::function<void(Vertex)> walk = [&](Vertex x) {
    for (auto [y, e] : adj[x]) {
      if (!path_edges.empty() && e == path_edges.back()) continue;
      if (y == start && !path_edges.empty()) {
        // closing edge must differ from every path edge; only the first can clash
        if (e == path_edges.front()) continue;
        for (auto pe : path_edges) d.unite(pe, e);
        continue;
      }
      if (y <= start || on_path[y]) continue;
      on_path[y] = true;
      path_edges.push_back(e);
      walk(y);
      path_edges.pop_back();
      on_path[y] = false;
    }
  };
  for (start = 1; start <= g.n(); ++start) {
    on_path[start] = true;
    walk(start);
    on_path[start] = false;
  }
  return classes_to_components(g, d);
}

std::vector<Component> trail_2eccs(const AdjGraph& g) {
  need_undirected(g);
  if (g.m() > 20) throw OracleLimit("closed-trail enumeration limited to m <= 20");
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  Dsu d(m);
  std::vector<unsigned> degree(g.n() + 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(degree.begin(), degree.end(), 0);
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) {
        ++degree[edges[i].first];
        ++degree[edges[i].second];
      }
    bool even = true;
    for (auto x : degree) even = even && x % 2 == 0;
    if (!even) continue;
    // connected edge set: an Euler circuit exists
    Dsu c(g.n() + 1);
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) {
        c.unite(edges[i].first, edges[i].second);
        if (first == m) first = i;
      }
    bool connected = true;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) connected = connected && c.find(edges[i].first) == c.find(edges[first].first);
    if (!connected) continue;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) d.unite(i, first);
  }
  return classes_to_components(g, d);
}

std::vector<Component> removal_bccs(const AdjGraph& g) {
  need_undirected(g);
  if (g.n() > 50) throw OracleLimit("removal oracle limited to n <= 50");
  const auto& edges = g.edges();
  Dsu d(edges.size());
  for (Vertex x = 1; x <= g.n(); ++x) {
    auto label = labels_without(g, x, SIZE_MAX, nullptr);
    std::vector<std::size_t> rep(g.n() + 2, SIZE_MAX);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (a != x && b != x) continue;
      Vertex other = a == x ? b : a;
      auto& r = rep[label[other]];
      if (r == SIZE_MAX) r = i;
      else d.unite(r, i);
    }
  }
  return classes_to_components(g, d);
}

std::vector<Component> removal_2eccs(const AdjGraph& g) {
  auto bridges = removal_bridges(g);
  const auto& edges = g.edges();
  std::vector<bool> is_bridge(edges.size(), false);
  for (auto b : bridges) is_bridge[b] = true;
  Dsu vd(g.n() + 1);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!is_bridge[i]) vd.unite(edges[i].first, edges[i].second);
  Dsu d(edges.size());
  std::vector<std::size_t> rep(g.n() + 1, SIZE_MAX);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (is_bridge[i]) continue;
    auto& r = rep[vd.find(edges[i].first)];
    if (r == SIZE_MAX) r = i;
    else d.unite(r, i);
  }
  return classes_to_components(g, d);
}

}  // namespace sdfs::harness
