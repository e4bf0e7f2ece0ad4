#include <CLI11.hpp>

#include <algorithm>
#include <initializer_list>
#include <iostream>
#include <string>
#include <vector>

#include "sdfs/apps.hpp"
#include "sdfs/apps_sparse.hpp"
#include "sdfs/dfs.hpp"
#include "sdfs/dfs_sparse.hpp"

using namespace sdfs;

namespace {

// Exit 1: bad flags or input. Exit 2: the input violates the command's
// precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  std::string algo;
  std::string input;
  std::string output = "both";
  std::string format = "text";
  std::string kind = "bcc";
  bool report = false;
  unsigned k = 1;
  std::vector<Vertex> query;
};

OutputSelector selector(const std::string& s) {
  if (s == "vertices") return OutputSelector::vertices;
  if (s == "edges") return OutputSelector::edges;
  if (s == "both") return OutputSelector::both;
  throw InputError("--output must be vertices, edges or both");
}

// "fixed-k=K" sets k as well.
std::string variant(Config& c, const std::string& fallback) {
  std::string a = c.algo.empty() ? fallback : c.algo;
  if (a.rfind("fixed-k=", 0) == 0) {
    try {
      c.k = static_cast<unsigned>(std::stoul(a.substr(8)));
    } catch (const std::exception&) {
      throw InputError("bad k in '" + a + "'");
    }
    return "fixed-k";
  }
  return a;
}

void require(const std::string& algo, std::initializer_list<const char*> allowed, const std::string& cmd) {
  for (const char* a : allowed)
    if (algo == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw InputError("--algo " + algo + " is not available for " + cmd + " (use " + list + ")");
}

// Items within a component are sorted; component order is the stream order.
void write_components(std::vector<Component> comps, const Config& c) {
  for (auto& comp : comps) {
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
  }
  if (c.format == "json") {
    std::cout << components_to_json(comps) << '\n';
    return;
  }
  TextSink text(std::cout);
  for (const auto& comp : comps) {
    text.begin_component();
    for (Vertex v : comp.vertices) text.vertex(v);
    for (auto [u, v] : comp.edges) text.edge(u, v);
    text.end_component();
  }
}

int run_dfs(Config& c, const AdjGraph& g) {
  const std::string a = variant(c, "dense");
  EventRecorder rec;
  DfsStats st;
  if (a == "dense") st = dfs_dense(g, rec, DenseVariant::plain);
  else if (a == "grouped") st = dfs_dense(g, rec, DenseVariant::grouped);
  else if (a == "loglog") st = dfs_loglog(g, rec);
  else if (a == "logstar") st = dfs_logstar(g, rec);
  else if (a == "fixed-k") st = dfs_fixed_k(g, c.k, rec);
  else require(a, {"dense", "grouped", "loglog", "logstar", "fixed-k"}, "dfs");
  for (const auto& e : rec.events) std::cout << format_event(e) << '\n';
  if (c.report) std::cerr << st.to_json() << '\n';
  return 0;
}

int run_scc(Config& c, const AdjGraph& g) {
  const std::string a = variant(c, "euler");
  require(a, {"euler", "parent"}, "scc");
  const OutputSelector sel = selector(c.output);
  BitMeter meter;
  std::vector<Edge> inter;
  SccOptions opt;
  opt.with_edges = want_edges(sel);
  opt.inter_component = opt.with_edges ? &inter : nullptr;
  opt.meter = &meter;
  CollectingSink sink;
  if (a == "euler") scc_euler(g, sink, opt);
  else scc_parent(g, sink, opt);
  if (!want_vertices(sel))
    for (auto& comp : sink.components) comp.vertices.clear();
  write_components(sink.components, c);
  if (c.format == "text")
    for (auto [u, v] : inter) std::cout << "x " << u << ' ' << v << '\n';
  if (c.report) std::cerr << meter.to_json() << '\n';
  return 0;
}

int run_topo(Config& c, const AdjGraph& g) {
  require(variant(c, "dense"), {"dense"}, "topo");
  BitMeter meter;
  auto order = toposort(g, &meter);
  for (std::size_t i = 0; i < order.size(); ++i) std::cout << (i ? " " : "") << order[i];
  std::cout << '\n';
  if (c.report) std::cerr << meter.to_json() << '\n';
  return 0;
}

BccKind kind_for(const std::string& cmd) {
  if (cmd == "cut") return BccKind::cut;
  if (cmd == "bridges") return BccKind::bridge;
  if (cmd == "bcc") return BccKind::bcc;
  return BccKind::tecc;
}

int run_bcc(Config& c, const AdjGraph& g) {
  const std::string a = variant(c, "dense");
  require(a, {"dense", "logstar", "fixed-k"}, c.command);
  const BccKind kind = kind_for(c.command);
  const OutputSelector sel = selector(c.output);
  CollectingSink sink;
  std::string report;
  if (a == "dense") {
    BitMeter meter;
    bcc_suite(g, kind, sel, sink, &meter);
    report = meter.to_json();
  } else {
    SparseBccOptions opt;
    opt.variant = a == "logstar" ? SparseVariant::logstar : SparseVariant::fixed_k;
    opt.k = c.k;
    report = bcc_suite_sparse(g, kind, sel, sink, opt).dfs.to_json();
  }
  write_components(sink.components, c);
  if (c.report) std::cerr << report << '\n';
  return 0;
}

int run_query(Config& c, const AdjGraph& g) {
  require(variant(c, "dense"), {"dense"}, "query");
  if (c.query.size() != 2) throw InputError("query needs --query u v");
  if (c.kind != "bcc" && c.kind != "2ecc") throw InputError("--kind must be bcc or 2ecc");
  ComponentQuery q(g, c.kind == "bcc" ? BccKind::bcc : BccKind::tecc);
  CollectingSink sink;
  q.query(c.query[0], c.query[1], selector(c.output), sink);
  write_components(sink.components, c);
  if (c.report) std::cerr << "{\"structure_bits\": " << q.bits() << ", \"work\": " << q.last_work() << "}\n";
  return 0;
}

int run_bench(Config& c, const AdjGraph& g) {
  const std::string a = variant(c, "dense");
  DfsEvents none;
  DfsStats st;
  if (a == "dense") st = dfs_dense(g, none, DenseVariant::plain);
  else if (a == "grouped") st = dfs_dense(g, none, DenseVariant::grouped);
  else if (a == "loglog") st = dfs_loglog(g, none);
  else if (a == "logstar") st = dfs_logstar(g, none);
  else if (a == "fixed-k") st = dfs_fixed_k(g, c.k, none);
  else require(a, {"dense", "grouped", "loglog", "logstar", "fixed-k"}, "bench");
  std::cout << "{\"algo\": \"" << a << "\", \"n\": " << g.n() << ", \"m\": " << g.m()
            << ", \"stats\": " << st.to_json() << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-efficient depth-first search and its applications"};
  app.require_subcommand(1);
  Config c;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"dfs", "print the traversal event log"},
      {"scc", "strongly connected components"},
      {"topo", "topological order"},
      {"cut", "cut vertices"},
      {"bridges", "bridges"},
      {"bcc", "biconnected components"},
      {"2ecc", "2-edge-connected components"},
      {"query", "the component holding one edge"},
      {"bench", "counters and space audit of one traversal"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--algo", c.algo, "variant: dense, grouped, loglog, logstar, fixed-k=K, euler, parent");
    sub->add_option("--input", c.input, "graph file")->required();
    sub->add_option("--output", c.output, "vertices, edges or both");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--report", c.report, "write the space audit as JSON to stderr");
    sub->add_option("--k", c.k, "highest stripe rank for fixed-k");
    if (name == "query") {
      sub->add_option("--query", c.query, "edge endpoints u v")->expected(2);
      sub->add_option("--kind", c.kind, "bcc or 2ecc");
    }
    sub->callback([&c, name = name] { c.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const AdjGraph g = read_graph_file(c.input);
    if (c.command == "dfs") return run_dfs(c, g);
    if (c.command == "scc") return run_scc(c, g);
    if (c.command == "topo") return run_topo(c, g);
    if (c.command == "query") return run_query(c, g);
    if (c.command == "bench") return run_bench(c, g);
    return run_bcc(c, g);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ModeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CyclicGraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownEdgeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
