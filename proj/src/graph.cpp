#include "sdfs/graph.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sdfs {

AdjGraph build_graph(Vertex n, std::span<const Edge> edges, GraphMode mode) {
  if (n < 1) throw GraphError("graph needs at least one vertex");
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 1.." + std::to_string(n));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  }

  AdjGraph g;
  g.n_ = n;
  g.m_ = edges.size();
  g.mode_ = mode;
  g.edges_.assign(edges.begin(), edges.end());

  std::vector<std::uint64_t> deg(n + 2, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offset_.assign(n + 2, 0);
  for (Vertex u = 1; u <= n; ++u) g.offset_[u + 1] = g.offset_[u] + deg[u];
  g.head_.assign(g.offset_[n + 1], 0);
  g.mate_.assign(g.offset_[n + 1], 0);

  // fill[u] is the next free slot at u
  std::vector<Slot> fill(n + 1, 0);
  auto place = [&](Vertex u, Vertex v) {
    Slot i = fill[u]++;
    g.head_[g.offset_[u] + i] = v;
    return i;
  };

  if (mode == GraphMode::undirected) {
    for (const auto& [u, v] : edges) {
      Slot i = place(u, v);
      Slot j = place(v, u);
      g.mate_[g.offset_[u] + i] = j;
      g.mate_[g.offset_[v] + j] = i;
    }
  } else {
    g.out_count_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) ++g.out_count_[u];
    std::vector<Slot> in_fill(n + 1, 0);
    for (Vertex u = 1; u <= n; ++u) in_fill[u] = g.out_count_[u];
    for (const auto& [u, v] : edges) {
      Slot i = fill[u]++;
      Slot j = in_fill[v]++;
      g.head_[g.offset_[u] + i] = v;
      g.head_[g.offset_[v] + j] = u;
      g.mate_[g.offset_[u] + i] = j;
      g.mate_[g.offset_[v] + j] = i;
    }
  }
  return g;
}

namespace {

std::uint64_t degree_of(const AdjGraph& g, Vertex v, DegreeMode mode) {
  switch (mode) {
    case DegreeMode::in: return g.indeg(v);
    case DegreeMode::out: return g.outdeg(v);
    default: return g.deg(v);
  }
}

}  // namespace

std::uint64_t l_metric(const AdjGraph& g, int k, DegreeMode mode) {
  if (mode != DegreeMode::total && !g.directed())
    throw GraphError("in/out degree metrics need a directed graph");
  std::uint64_t sum = 0;
  for (Vertex v = 1; v <= g.n(); ++v) {
    std::int64_t x = static_cast<std::int64_t>(degree_of(g, v, mode)) + k;
    if (x >= 2) sum += ceil_log2(static_cast<std::uint64_t>(x));
  }
  return sum;
}

double l1_jensen_bound(const AdjGraph& g, DegreeMode mode) {
  double n = g.n();
  double m = static_cast<double>(g.m());
  double c = mode == DegreeMode::total ? 4.0 : 2.0;
  return n * std::log2(1.0 + c * m / n);
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_number(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

AdjGraph parse_graph(std::string_view text) {
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  GraphMode mode = GraphMode::undirected;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 4) throw ParseError(line_no, "header must be 'p <n> <m> <u|d>'");
      n = to_number(tok[1], line_no);
      m = to_number(tok[2], line_no);
      if (tok[3] == "u") mode = GraphMode::undirected;
      else if (tok[3] == "d") mode = GraphMode::directed;
      else throw ParseError(line_no, "graph mode must be 'u' or 'd'");
      if (n < 1 || n > 0xfffffffeULL) throw ParseError(line_no, "vertex count out of range");
      have_header = true;
      edges.reserve(m);
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before header");
      if (tok.size() != 3) throw ParseError(line_no, "edge line must be 'e <u> <v>'");
      std::uint64_t u = to_number(tok[1], line_no), v = to_number(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "endpoint out of range");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  if (edges.size() != m)
    throw ParseError(line_no, "edge count mismatch: header says " + std::to_string(m) +
                                  ", found " + std::to_string(edges.size()));
  return build_graph(static_cast<Vertex>(n), edges, mode);
}

std::string serialize_graph(const AdjGraph& g) {
  std::string out;
  out.reserve(16 + g.m() * 16);
  out += "p " + std::to_string(g.n()) + " " + std::to_string(g.m()) +
         (g.directed() ? " d\n" : " u\n");
  for (const auto& [u, v] : g.edges()) {
    out += "e ";
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

AdjGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

}  // namespace sdfs
