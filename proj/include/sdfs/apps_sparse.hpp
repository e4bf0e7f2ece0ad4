#pragma once

#include <cstdint>

#include "sdfs/apps.hpp"
#include "sdfs/components.hpp"
#include "sdfs/dfs_sparse.hpp"

namespace sdfs {

struct SparseBccOptions {
  /// logstar or fixed_k.
  SparseVariant variant = SparseVariant::logstar;
  unsigned k = 1;
  /// Vertices per complete segment; 0 picks the default, otherwise >= 3.
  std::uint64_t segment_size = 0;
  /// Recompute R naively alongside and compare at every read. Also
  /// enabled by SDFS_SHADOW.
  bool shadow_r = false;
};

struct SparseBccStats {
  DfsStats dfs;
  std::uint64_t stack_pushes = 0;
  std::uint64_t stack_pops = 0;
  std::uint64_t shadow_reads = 0;
  /// Peak bits of the R array, the uncovered stack and the position tables.
  std::uint64_t marks_bits = 0;
  std::uint64_t stack_peak_bits = 0;
  std::uint64_t table_peak_bits = 0;
};

/// Same output as bcc_suite, computed with one density-independent DFS and
/// eager restoration. Components are emitted by a second traversal over
/// the finished vertices of each component.
SparseBccStats bcc_suite_sparse(const AdjGraph& g, BccKind which, OutputSelector output, ComponentSink& out,
                                SparseBccOptions opt = {});

}  // namespace sdfs
