#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdfs {

/// Vertices are numbered 1..n.
using Vertex = std::uint32_t;
/// Position of an incident edge within a vertex's adjacency array.
using Slot = std::uint32_t;

enum class GraphMode { undirected, directed };

enum class DegreeMode { total, in, out };

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable adjacency-array graph with cross links.
///
/// Every vertex owns one incidence array. For a directed graph the array
/// holds the outgoing slots first, then the incoming slots; the direction
/// flag tells them apart. mate(u, i) is the slot at head(u, i) that refers
/// back to u, so mate is an involution on slots.
class AdjGraph {
 public:
  AdjGraph() = default;

  Vertex n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }
  GraphMode mode() const noexcept { return mode_; }
  bool directed() const noexcept { return mode_ == GraphMode::directed; }

  Slot deg(Vertex u) const noexcept { return offset_[u + 1] - offset_[u]; }
  Slot outdeg(Vertex u) const noexcept { return directed() ? out_count_[u] : deg(u); }
  Slot indeg(Vertex u) const noexcept { return directed() ? deg(u) - out_count_[u] : deg(u); }

  Vertex head(Vertex u, Slot i) const noexcept { return head_[offset_[u] + i]; }
  Slot mate(Vertex u, Slot i) const noexcept { return mate_[offset_[u] + i]; }
  /// True if slot i at u is an outgoing edge (always true when undirected).
  bool outgoing(Vertex u, Slot i) const noexcept { return !directed() || i < out_count_[u]; }

  std::span<const Vertex> neighbors(Vertex u) const noexcept {
    return {head_.data() + offset_[u], deg(u)};
  }

  std::uint64_t slot_count() const noexcept { return head_.size(); }
  /// Global 0-based index of slot i at u; slots of u are contiguous.
  std::uint64_t slot_index(Vertex u, Slot i) const noexcept { return offset_[u] + i; }

  /// The edges in their original input order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend AdjGraph build_graph(Vertex n, std::span<const Edge> edges, GraphMode mode);

 private:
  Vertex n_ = 0;
  std::uint64_t m_ = 0;
  GraphMode mode_ = GraphMode::undirected;
  std::vector<std::uint64_t> offset_;  // size n + 2, index 0 unused
  std::vector<Vertex> head_;
  std::vector<Slot> mate_;
  std::vector<Slot> out_count_;  // directed only
  std::vector<Edge> edges_;
};

/// Builds the adjacency arrays. Slot order within each array follows the
/// input edge order. Throws GraphError on self-loops or bad endpoints.
AdjGraph build_graph(Vertex n, std::span<const Edge> edges, GraphMode mode);

inline AdjGraph build_graph(Vertex n, std::initializer_list<Edge> edges, GraphMode mode) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()), mode);
}

/// L_k: sum over vertices with d+k >= 2 of ceil(log2(d+k)).
std::uint64_t l_metric(const AdjGraph& g, int k, DegreeMode mode = DegreeMode::total);

/// Jensen bound on L_1: n*log2(1+4m/n) for total degrees, n*log2(1+2m/n)
/// for in/out degrees.
double l1_jensen_bound(const AdjGraph& g, DegreeMode mode = DegreeMode::total);

/// ceil(log2(x)) for x >= 1; 0 for x <= 1.
constexpr unsigned ceil_log2(std::uint64_t x) noexcept {
  unsigned r = 0;
  while ((std::uint64_t{1} << r) < x) ++r;
  return r;
}

/// Number of bits needed to write x in binary; bit_length(0) == 0.
constexpr unsigned bit_length(std::uint64_t x) noexcept {
  unsigned r = 0;
  while (x != 0) {
    ++r;
    x >>= 1;
  }
  return r;
}

AdjGraph parse_graph(std::string_view text);
std::string serialize_graph(const AdjGraph& g);
AdjGraph read_graph_file(const std::string& path);

}  // namespace sdfs
