#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sdfs/bit_stack.hpp"
#include "sdfs/dfs.hpp"
#include "sdfs/packed.hpp"
#include "sdfs/ragged_array.hpp"
#include "sdfs/static_alloc.hpp"
#include "sdfs/ternary_array.hpp"

namespace sdfs {

enum class SparseVariant { loglog, logstar, fixed_k };

/// Powers of two p_1 > p_2 > ... > p_t = 1 with p_1 the smallest power of
/// two >= sqrt(log2 n) and p_i = 2^ceil(log2 log2 p_{i-1}).
struct RankSchedule {
  std::vector<std::uint64_t> p;  // p[0] is p_1
  unsigned t() const noexcept { return static_cast<unsigned>(p.size()); }
  /// Segments in a stripe of rank i (1-based): (p_1/p_i)^2.
  std::uint64_t segments_in(unsigned rank) const { return sq(p[0] / p[rank - 1]); }
  /// Stripes of rank i-1 merged by a join into rank i: (p_{i-1}/p_i)^2.
  std::uint64_t join_width(unsigned rank) const { return sq(p[rank - 2] / p[rank - 1]); }
  static RankSchedule for_n(std::uint64_t n);

 private:
  static std::uint64_t sq(std::uint64_t x) { return x * x; }
};

struct SparseOptions {
  SparseVariant variant = SparseVariant::logstar;
  /// Highest rank used by the fixed-k variant.
  unsigned k = 1;
  /// Restore once S' is down to two vertices instead of zero.
  bool eager = false;
  /// loglog: a new segment starts once the top one holds more than this
  /// many turn bits. 0 means n.
  std::uint64_t threshold_bits = 0;
  /// logstar / fixed-k: vertices in a complete segment. 0 means
  /// max(3, ceil(n / p_1^2)).
  std::uint64_t segment_size = 0;
  /// Keep a full shadow copy of every dropped segment and compare it with
  /// the restored one. Also enabled by the SDFS_SHADOW environment variable.
  bool shadow = false;
};

class ShadowMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Depth-first search with only the top one or two segments of the turn
/// stack kept; buried segments are rebuilt from the vertex colors, the
/// per-vertex stripe (or hue) indices and the trailer stack when needed.
///
/// Derived classes may filter vertices (admissible) and observe stack
/// maintenance through the protected hooks.
class SegmentedDfs {
 public:
  SegmentedDfs(const AdjGraph& g, SparseOptions opt);
  virtual ~SegmentedDfs() = default;
  SegmentedDfs(const SegmentedDfs&) = delete;
  SegmentedDfs& operator=(const SegmentedDfs&) = delete;

  /// Visits every vertex, roots in order 1..n.
  void run(DfsEvents& ev);
  /// One tree from root over admissible vertices; root must be white.
  void run_from(Vertex root, DfsEvents& ev);

  DfsStats& stats() noexcept { return stats_; }
  const DfsStats& stats() const noexcept { return stats_; }
  std::uint64_t segment_size() const noexcept { return seg_size_; }
  std::uint64_t threshold_bits() const noexcept { return threshold_; }
  const RankSchedule& schedule() const noexcept { return sched_; }

  unsigned color(Vertex v) const { return color_.read(v); }
  static constexpr unsigned kWhite = 0, kGray = 1, kBlack = 2;

  /// Stripe index (logstar, fixed-k) or hue (loglog) of a gray vertex.
  std::uint64_t stripe_of(Vertex v) const;
  /// Number of stripes below the top (current) segment.
  std::uint64_t stripe_count() const noexcept { return ranks_.size(); }
  /// Whether v is gray and lies in a segment currently held on S'.
  bool on_surface(Vertex v) const;
  /// 0 for the top segment, 1 for the one below it (if held).
  unsigned surface_slot(Vertex v) const;
  std::uint64_t surface_vertices() const noexcept;
  /// Stripe ranks from the bottom; checks the nonincreasing order.
  const std::vector<std::uint8_t>& ranks() const noexcept { return ranks_; }
  void check_stripe_order() const;

 protected:
  enum class WalkKind { restore, split, join, reindex };

  virtual bool admissible(Vertex) const { return true; }
  /// w was just placed on S' at position pos of the top segment; u is the
  /// parent of v or 0.
  virtual void on_discover(Vertex /*w*/, Vertex /*v*/, Vertex /*u*/, std::uint64_t /*pos*/) {}
  /// w turned black; runs before any segment maintenance of the withdrawal.
  virtual void on_blacken(Vertex /*w*/) {}
  /// w left S'; v is now current with parent u (0 if v is the root).
  virtual void on_withdraw(Vertex /*w*/, Vertex /*v*/, Vertex /*u*/) {}
  virtual void on_back_edge(Vertex /*y*/, Vertex /*x*/, const BackEdge&) {}
  virtual void on_root_begin(Vertex) {}
  virtual void on_root_end(Vertex) {}
  /// The lower surface segment (stripe index id, bottom vertex) is dropped.
  virtual void on_drop(std::uint64_t /*id*/, Vertex /*bottom*/) {}
  /// The top segment became empty and the one below it took its place.
  virtual void on_promote() {}
  virtual void on_walk_begin(WalkKind) {}
  /// Vertices arrive bottom to top. stripe_start marks the bottom vertex
  /// of each stripe the walk creates or passes.
  virtual void on_walk_vertex(WalkKind, Vertex /*x*/, std::uint64_t /*old_id*/, std::uint64_t /*new_id*/,
                              std::uint64_t /*pos*/, bool /*stripe_start*/) {}
  virtual void on_walk_end(WalkKind) {}

  const AdjGraph& graph() const noexcept { return g_; }
  Vertex current() const noexcept { return v_; }
  Vertex root() const noexcept { return root_; }

 private:
  struct Segment {
    BitStack turns;
    std::uint64_t count = 0;
    Vertex bottom = 0;
    std::int64_t bottom_k = -1;
    std::uint64_t ordinal = 0;
  };
  struct Trail {
    Vertex last;
    Slot slot;
  };

  void tree(Vertex r, DfsEvents& ev);
  void descend(Vertex w, Slot s);
  void withdraw_segment();
  void close_current(Vertex v, Slot s, Vertex w);
  void promote();
  void restore_top(bool as_current);
  void split_top();
  void maybe_join();
  void drop_lower();
  void set_id(Vertex v, std::uint64_t id);
  void clear_id(Vertex v);
  std::pair<Vertex, std::int64_t> segment_bottom(std::uint64_t q) const;
  std::optional<Slot> find_child(Vertex x, std::int64_t kx, std::uint64_t id, bool by_mark);
  template <class F>
  void walk(std::uint64_t seg_a, std::uint64_t seg_b, F&& f);
  std::uint64_t top_id() const noexcept { return ranks_.size(); }
  void note_space();
  void shadow_check(std::uint64_t ordinal, const BitStack& rebuilt);
  bool segment_complete() const;

  const AdjGraph& g_;
  SparseOptions opt_;
  RankSchedule sched_;
  unsigned kmax_ = 1;
  std::uint64_t seg_size_ = 0;
  std::uint64_t threshold_ = 0;
  std::uint64_t G_ = 1;  // slots per explored group
  unsigned reg_w_ = 1;
  bool degenerate_ = false;

  TernaryArray color_;
  RaggedArray ragged_ids_;
  StaticAllocArray hue_ids_;
  unsigned hue_width_ = 0;
  StaticAllocArray counters_;
  BitArray walk_mark_;

  std::vector<Segment> segs_;  // at most two; back() is the top segment
  std::vector<Trail> trailer_;
  std::vector<std::uint8_t> ranks_;
  std::vector<std::uint64_t> first_seg_;
  std::vector<std::uint64_t> rank_count_;
  std::vector<BitStack> shadow_;  // by segment ordinal

  Vertex v_ = 0, root_ = 0;
  std::int64_t k_ = -1, l_ = -1, l0_ = 0;
  DfsEvents* ev_ = nullptr;
  DfsStats stats_;
  BitMeter::Handle h_color_{}, h_ids_{}, h_counters_{}, h_mark_{}, h_stack_{}, h_trailer_{}, h_stripes_{},
      h_regs_{};
};

/// The three density-independent traversals; event sequences equal those
/// of dfs_dense.
DfsStats dfs_loglog(const AdjGraph& g, DfsEvents& ev, SparseOptions opt = {});
DfsStats dfs_logstar(const AdjGraph& g, DfsEvents& ev, SparseOptions opt = {});
DfsStats dfs_fixed_k(const AdjGraph& g, unsigned k, DfsEvents& ev, SparseOptions opt = {});

}  // namespace sdfs
