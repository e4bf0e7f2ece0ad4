#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sdfs/components.hpp"

namespace sdfs {

void canonicalize(std::vector<Component>& comps, bool undirected) {
  for (auto& c : comps) {
    std::sort(c.vertices.begin(), c.vertices.end());
    if (undirected)
      for (auto& e : c.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(c.edges.begin(), c.edges.end());
  }
  std::sort(comps.begin(), comps.end());
}

void canonicalize(Partition& p) {
  for (auto& c : p) std::sort(c.begin(), c.end());
  std::sort(p.begin(), p.end());
}

void CollectingSink::begin_component() {
  if (open_) throw std::logic_error("component started inside another");
  open_ = true;
  components.emplace_back();
}

void CollectingSink::vertex(Vertex v) {
  if (!open_) throw std::logic_error("vertex emitted outside a component");
  components.back().vertices.push_back(v);
}

void CollectingSink::edge(Vertex u, Vertex v) {
  if (!open_) throw std::logic_error("edge emitted outside a component");
  components.back().edges.emplace_back(u, v);
}

void CollectingSink::end_component() {
  if (!open_) throw std::logic_error("component closed twice");
  open_ = false;
}

std::string components_to_json(const std::vector<Component>& comps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::uint64_t id = 0;
  for (const auto& c : comps) {
    nlohmann::ordered_json j;
    j["id"] = ++id;
    j["vertices"] = c.vertices;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : c.edges) edges.push_back({u, v});
    j["edges"] = edges;
    arr.push_back(j);
  }
  nlohmann::ordered_json out;
  out["components"] = arr;
  return out.dump();
}

std::vector<Component> parse_component_text(const std::string& text) {
  std::vector<Component> out;
  std::istringstream in(text);
  std::string tag;
  while (in >> tag) {
    if (tag == "c") {
      std::uint64_t id;
      in >> id;
      out.emplace_back();
    } else if (tag == "v") {
      Vertex v;
      in >> v;
      if (out.empty()) throw std::runtime_error("vertex before the first component");
      out.back().vertices.push_back(v);
    } else if (tag == "e") {
      Vertex u, v;
      in >> u >> v;
      if (out.empty()) throw std::runtime_error("edge before the first component");
      out.back().edges.emplace_back(u, v);
    } else {
      throw std::runtime_error("unexpected token '" + tag + "'");
    }
  }
  return out;
}

Partition vertex_partition(const std::vector<Component>& comps) {
  Partition p;
  for (const auto& c : comps) p.push_back(c.vertices);
  canonicalize(p);
  return p;
}

}  // namespace sdfs
