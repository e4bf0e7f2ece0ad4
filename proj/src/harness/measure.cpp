#include <json.hpp>
#include <stdexcept>

#include "sdfs/dfs_sparse.hpp"
#include "sdfs/harness.hpp"

namespace sdfs::harness {

Measurement measure(const AdjGraph& g, const RunDescriptor& run, DfsEvents* events) {
  DfsEvents none;
  DfsEvents& ev = events ? *events : none;
  Measurement out;
  out.algo = run.algo;
  out.n = g.n();
  out.m = g.m();
  SparseOptions opt;
  opt.eager = run.eager;
  opt.segment_size = run.segment_size;
  if (run.algo == "dense") out.stats = dfs_dense(g, ev, DenseVariant::plain);
  else if (run.algo == "grouped") out.stats = dfs_dense(g, ev, DenseVariant::grouped);
  else if (run.algo == "loglog") out.stats = dfs_loglog(g, ev, opt);
  else if (run.algo == "logstar") out.stats = dfs_logstar(g, ev, opt);
  else if (run.algo == "fixed_k") out.stats = dfs_fixed_k(g, run.k, ev, opt);
  else throw std::invalid_argument("unknown traversal '" + run.algo + "'");
  return out;
}

std::string Measurement::to_json() const {
  nlohmann::ordered_json j;
  j["algo"] = algo;
  j["n"] = n;
  j["m"] = m;
  j["stats"] = nlohmann::ordered_json::parse(stats.to_json());
  return j.dump();
}

}  // namespace sdfs::harness
