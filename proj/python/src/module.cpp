#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "sdfs/apps.hpp"
#include "sdfs/apps_sparse.hpp"
#include "sdfs/dfs.hpp"
#include "sdfs/dfs_sparse.hpp"

namespace py = pybind11;
using namespace sdfs;

namespace {

using PyComponent = std::tuple<std::vector<Vertex>, std::vector<Edge>>;

std::vector<PyComponent> convert(const std::vector<Component>& comps) {
  std::vector<PyComponent> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.emplace_back(c.vertices, c.edges);
  return out;
}

OutputSelector selector(const std::string& s) {
  if (s == "vertices") return OutputSelector::vertices;
  if (s == "edges") return OutputSelector::edges;
  if (s == "both") return OutputSelector::both;
  throw py::value_error("output must be 'vertices', 'edges' or 'both'");
}

BccKind kind_of(const std::string& s) {
  if (s == "cut") return BccKind::cut;
  if (s == "bridges") return BccKind::bridge;
  if (s == "bcc") return BccKind::bcc;
  if (s == "2ecc") return BccKind::tecc;
  throw py::value_error("kind must be 'cut', 'bridges', 'bcc' or '2ecc'");
}

const char* kind_name(Event::Kind k) {
  switch (k) {
    case Event::Kind::pre: return "pre";
    case Event::Kind::post: return "post";
    case Event::Kind::tree: return "tree";
    case Event::Kind::retreat: return "retreat";
    case Event::Kind::back: return "back";
  }
  return "?";
}

py::object json_loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

DfsStats run_dfs(const AdjGraph& g, const std::string& algo, unsigned k, DfsEvents& ev) {
  if (algo == "dense") return dfs_dense(g, ev, DenseVariant::plain);
  if (algo == "grouped") return dfs_dense(g, ev, DenseVariant::grouped);
  if (algo == "loglog") return dfs_loglog(g, ev);
  if (algo == "logstar") return dfs_logstar(g, ev);
  if (algo == "fixed-k") return dfs_fixed_k(g, k, ev);
  throw py::value_error("unknown dfs algorithm '" + algo + "'");
}

}  // namespace

PYBIND11_MODULE(_sdfs, m) {
  m.doc() = "Space-efficient depth-first search and its graph applications";

  auto graph_error = py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", graph_error.ptr());
  py::register_exception<ModeError>(m, "ModeError", graph_error.ptr());
  py::register_exception<CyclicGraphError>(m, "CyclicGraphError", graph_error.ptr());
  py::register_exception<UnknownEdgeError>(m, "UnknownEdgeError", graph_error.ptr());

  py::class_<AdjGraph>(m, "Graph")
      .def(py::init([](Vertex n, const std::vector<Edge>& edges, bool directed) {
             return build_graph(n, edges, directed ? GraphMode::directed : GraphMode::undirected);
           }),
           py::arg("n"), py::arg("edges"), py::arg("directed") = false)
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("read", &read_graph_file, py::arg("path"))
      .def_property_readonly("n", &AdjGraph::n)
      .def_property_readonly("m", &AdjGraph::m)
      .def_property_readonly("directed", &AdjGraph::directed)
      .def("deg", &AdjGraph::deg)
      .def("neighbors", [](const AdjGraph& g, Vertex u) {
        if (u < 1 || u > g.n()) throw py::index_error("vertex out of range");
        auto s = g.neighbors(u);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("edges", &AdjGraph::edges)
      .def("serialize", &serialize_graph)
      .def("l_metric", [](const AdjGraph& g, int k) { return l_metric(g, k); }, py::arg("k"))
      .def("__repr__", [](const AdjGraph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) +
               (g.directed() ? " directed>" : " undirected>");
      });

  m.def(
      "dfs",
      [](const AdjGraph& g, const std::string& algo, unsigned k) {
        EventRecorder rec;
        DfsStats st = run_dfs(g, algo, k, rec);
        py::list events;
        for (const auto& e : rec.events) {
          if (e.kind == Event::Kind::pre || e.kind == Event::Kind::post)
            events.append(py::make_tuple(kind_name(e.kind), e.a));
          else if (e.kind == Event::Kind::back)
            events.append(py::make_tuple(kind_name(e.kind), e.a, e.b, e.parent));
          else
            events.append(py::make_tuple(kind_name(e.kind), e.a, e.b));
        }
        return py::make_tuple(events, json_loads(st.to_json()));
      },
      py::arg("graph"), py::arg("algo") = "dense", py::arg("k") = 1,
      "Runs one traversal; returns (events, stats).");

  m.def(
      "format_events",
      [](const AdjGraph& g, const std::string& algo, unsigned k) {
        EventRecorder rec;
        run_dfs(g, algo, k, rec);
        std::vector<std::string> lines;
        lines.reserve(rec.events.size());
        for (const auto& e : rec.events) lines.push_back(format_event(e));
        return lines;
      },
      py::arg("graph"), py::arg("algo") = "dense", py::arg("k") = 1);

  m.def(
      "scc",
      [](const AdjGraph& g, const std::string& algo) {
        CollectingSink sink;
        if (algo == "euler") scc_euler(g, sink);
        else if (algo == "parent") scc_parent(g, sink);
        else throw py::value_error("scc algorithm must be 'euler' or 'parent'");
        std::vector<std::vector<Vertex>> parts;
        for (auto& c : sink.components) parts.push_back(std::move(c.vertices));
        return parts;
      },
      py::arg("graph"), py::arg("algo") = "euler");

  m.def("toposort", [](const AdjGraph& g) { return toposort(g); }, py::arg("graph"));
  m.def("cut_vertices", &cut_vertices, py::arg("graph"));
  m.def("bridges", &bridges, py::arg("graph"));

  m.def(
      "components",
      [](const AdjGraph& g, const std::string& kind, const std::string& output, const std::string& algo,
         unsigned k) {
        CollectingSink sink;
        if (algo == "dense") {
          bcc_suite(g, kind_of(kind), selector(output), sink);
        } else if (algo == "logstar" || algo == "fixed-k") {
          SparseBccOptions opt;
          opt.variant = algo == "logstar" ? SparseVariant::logstar : SparseVariant::fixed_k;
          opt.k = k;
          bcc_suite_sparse(g, kind_of(kind), selector(output), sink, opt);
        } else {
          throw py::value_error("algorithm must be 'dense', 'logstar' or 'fixed-k'");
        }
        return convert(sink.components);
      },
      py::arg("graph"), py::arg("kind") = "bcc", py::arg("output") = "both", py::arg("algo") = "dense",
      py::arg("k") = 1, "Biconnected or 2-edge-connected components as (vertices, edges) pairs.");

  m.def(
      "query",
      [](const AdjGraph& g, Vertex u, Vertex v, const std::string& kind, const std::string& output) {
        if (kind != "bcc" && kind != "2ecc") throw py::value_error("kind must be 'bcc' or '2ecc'");
        ComponentQuery q(g, kind_of(kind));
        CollectingSink sink;
        q.query(u, v, selector(output), sink);
        return convert(sink.components).at(0);
      },
      py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("kind") = "bcc", py::arg("output") = "both",
      "The component holding edge {u, v}.");
}
