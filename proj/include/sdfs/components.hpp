#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sdfs/graph.hpp"

namespace sdfs {

/// What a component emission carries.
enum class OutputSelector { vertices, edges, both };

inline bool want_vertices(OutputSelector s) noexcept { return s != OutputSelector::edges; }
inline bool want_edges(OutputSelector s) noexcept { return s != OutputSelector::vertices; }

/// Receives components one after another. Items of one component arrive
/// between begin_component and end_component.
class ComponentSink {
 public:
  virtual ~ComponentSink() = default;
  virtual void begin_component() = 0;
  virtual void vertex(Vertex v) = 0;
  virtual void edge(Vertex u, Vertex v) = 0;
  virtual void end_component() = 0;
};

struct Component {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  friend bool operator==(const Component&, const Component&) = default;
  friend auto operator<=>(const Component&, const Component&) = default;
};

using Partition = std::vector<std::vector<Vertex>>;

/// Sorts vertices, orients undirected edges as (min, max), sorts edges and
/// then the components themselves.
void canonicalize(std::vector<Component>& comps, bool undirected = true);
void canonicalize(Partition& p);

/// Collects everything; also checks that nothing arrives outside a
/// component.
class CollectingSink : public ComponentSink {
 public:
  void begin_component() override;
  void vertex(Vertex v) override;
  void edge(Vertex u, Vertex v) override;
  void end_component() override;
  std::vector<Component> components;

 private:
  bool open_ = false;
};

/// Text form: "c <id>" per component (ids from 1), then "v <x>" and
/// "e <u> <v>" lines.
class TextSink : public ComponentSink {
 public:
  explicit TextSink(std::ostream& out) : out_(out) {}
  void begin_component() override { out_ << "c " << ++id_ << '\n'; }
  void vertex(Vertex v) override { out_ << "v " << v << '\n'; }
  void edge(Vertex u, Vertex v) override { out_ << "e " << u << ' ' << v << '\n'; }
  void end_component() override {}

 private:
  std::ostream& out_;
  std::uint64_t id_ = 0;
};

/// JSON form: {"components": [{"id": 1, "vertices": [...], "edges": [[u, v], ...]}, ...]}.
std::string components_to_json(const std::vector<Component>& comps);
/// Parses the text form back; used by tests and tools.
std::vector<Component> parse_component_text(const std::string& text);

Partition vertex_partition(const std::vector<Component>& comps);

}  // namespace sdfs
