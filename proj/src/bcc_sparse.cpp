#include "sdfs/apps_sparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "emitter.hpp"

namespace sdfs {

namespace {

using detail::Emitter;
using detail::multiplicity;

constexpr unsigned kFalse = 0, kTrue = 1, kProp = 2;

// Visits finished vertices only; its own colors tell emitted vertices
// (black) from pending ones (white).
class InnerDfs : public SegmentedDfs {
 public:
  InnerDfs(const AdjGraph& g, SparseOptions o, const SegmentedDfs& outer) : SegmentedDfs(g, o), outer_(outer) {}

 protected:
  bool admissible(Vertex y) const override { return outer_.color(y) == kBlack; }

 private:
  const SegmentedDfs& outer_;
};

class ClassEvents : public DfsEvents {
 public:
  ClassEvents(const AdjGraph& g, const InnerDfs& dfs, Emitter& em, bool edges)
      : g_(g), dfs_(dfs), em_(em), edges_(edges) {}
  Vertex attach = 0;

  void preprocess(Vertex x) override {
    em_.vertex(x);
    if (!edges_ || attach == 0) return;
    for (Vertex y : g_.neighbors(x))
      if (y == attach) em_.edge(attach, x);
  }
  void explore_tree_edge(Vertex y, Vertex z, Slot) override {
    if (edges_) em_.edge(y, z);
  }
  void handle_back_edge(Vertex y, Vertex z, const BackEdge& be) override {
    if (edges_ && !be.parent && dfs_.color(z) == SegmentedDfs::kGray) em_.edge(z, y);
  }

 private:
  const AdjGraph& g_;
  const InnerDfs& dfs_;
  Emitter& em_;
  bool edges_;
};

class BccSparse : public SegmentedDfs {
 public:
  BccSparse(const AdjGraph& g, SparseOptions o, BccKind which, OutputSelector output, ComponentSink& out,
            bool shadow);
  SparseBccStats solve();

 protected:
  void on_root_begin(Vertex r) override;
  void on_root_end(Vertex r) override;
  void on_discover(Vertex w, Vertex v, Vertex u, std::uint64_t pos) override;
  void on_blacken(Vertex w) override;
  void on_withdraw(Vertex w, Vertex v, Vertex u) override;
  void on_back_edge(Vertex y, Vertex x, const BackEdge& be) override;
  void on_drop(std::uint64_t id, Vertex bottom) override;
  void on_promote() override { tabs_.pop_back(); }
  void on_walk_begin(WalkKind k) override;
  void on_walk_vertex(WalkKind k, Vertex x, std::uint64_t old_id, std::uint64_t new_id, std::uint64_t pos,
                      bool stripe_start) override;
  void on_walk_end(WalkKind k) override;

 private:
  struct Entry {
    Vertex v;
    bool rep;
  };
  using Table = std::unordered_map<Vertex, std::uint64_t>;

  std::uint64_t pos_of(Vertex x) const;
  // S_u order: stripe index, then position; a representative sits below
  // every position of its stripe
  bool at_or_above(const Entry& e, std::uint64_t id, std::int64_t pos) const;
  void push_entry(Entry e);
  void pop_entry();
  void mark_popped(const Entry& e);
  // index of the representative of stripe id in S_u, or its insertion point
  std::size_t rep_index(std::uint64_t id, bool& found) const;
  void emit_class(Vertex top, Vertex attach);
  void retire(Vertex w);
  void note();
  void shadow_read(Vertex u, bool value);

  BccKind which_;
  ComponentSink& out_;
  Emitter em_;
  bool shadow_;
  TernaryArray rbar_;
  std::vector<Entry> su_;
  std::vector<Table> tabs_;  // front: lower surface segment
  BitArray child_true_, nonbridge_, cut_;
  std::vector<Edge> bridges_;
  std::uint64_t root_children_ = 0;
  InnerDfs inner_;
  ClassEvents class_events_;
  SparseBccStats st_;

  // walk state
  bool prop_seen_ = false;
  std::uint64_t walk_old_ = 0;
  std::vector<std::pair<Vertex, std::uint64_t>> restored_;
  std::vector<std::pair<Vertex, bool>> new_stripes_;  // bottom, holds a false mark

  // shadow R over depths
  std::vector<std::uint32_t> depth_;
  std::vector<bool> sh_r_;
};

SparseOptions inner_options(SparseOptions o) {
  o.eager = false;
  o.shadow = false;
  return o;
}

BccSparse::BccSparse(const AdjGraph& g, SparseOptions o, BccKind which, OutputSelector output, ComponentSink& out,
                     bool shadow)
    : SegmentedDfs(g, o),
      which_(which),
      out_(out),
      em_(out, output),
      shadow_(shadow),
      rbar_(g.n() + 1),
      child_true_(g.n() + 1),
      nonbridge_(which == BccKind::tecc ? g.n() + 1 : 0),
      cut_(which == BccKind::cut ? g.n() + 1 : 0),
      inner_(g, inner_options(o), *this),
      class_events_(g, inner_, em_, want_edges(output)) {
  if (shadow_) {
    depth_.assign(g.n() + 1, 0);
    sh_r_.reserve(64);
  }
}

std::uint64_t BccSparse::pos_of(Vertex x) const {
  const Table& t = surface_slot(x) == 0 ? tabs_.back() : tabs_.front();
  auto it = t.find(x);
  if (it == t.end()) throw std::logic_error("no position recorded for vertex " + std::to_string(x));
  return it->second;
}

bool BccSparse::at_or_above(const Entry& e, std::uint64_t id, std::int64_t pos) const {
  const std::uint64_t eid = stripe_of(e.v);
  if (eid != id) return eid > id;
  const std::int64_t epos = e.rep ? -1 : static_cast<std::int64_t>(pos_of(e.v));
  return epos >= pos;
}

void BccSparse::push_entry(Entry e) {
  su_.push_back(e);
  ++st_.stack_pushes;
}

void BccSparse::pop_entry() {
  su_.pop_back();
  ++st_.stack_pops;
}

void BccSparse::mark_popped(const Entry& e) { rbar_.write(e.v, e.rep ? kProp : kTrue); }

std::size_t BccSparse::rep_index(std::uint64_t id, bool& found) const {
  std::size_t i = su_.size();
  while (i > 0) {
    const Entry& e = su_[i - 1];
    const std::uint64_t eid = stripe_of(e.v);
    if (eid < id) break;
    if (eid == id && e.rep) {
      found = true;
      return i - 1;
    }
    --i;
  }
  found = false;
  return i;
}

void BccSparse::note() {
  const std::uint64_t vw = bit_length(graph().n());
  std::uint64_t table = 0;
  for (const auto& t : tabs_) table += t.size();
  st_.stack_peak_bits = std::max<std::uint64_t>(st_.stack_peak_bits, su_.size() * (vw + 1));
  st_.table_peak_bits = std::max<std::uint64_t>(st_.table_peak_bits, table * 2 * vw);
}

void BccSparse::shadow_read(Vertex u, bool value) {
  if (!shadow_) return;
  ++st_.shadow_reads;
  if (sh_r_[depth_[u]] != value)
    throw ShadowMismatch("R at vertex " + std::to_string(u) + " is " + (value ? "true" : "false") +
                         " but the naive value is " + (value ? "false" : "true"));
}

void BccSparse::on_root_begin(Vertex r) {
  tabs_.assign(1, Table{{r, 0}});
  su_.clear();
  root_children_ = 0;
  if (shadow_) {
    depth_[r] = 0;
    sh_r_.assign(1, false);
  }
}

void BccSparse::on_discover(Vertex w, Vertex v, Vertex u, std::uint64_t pos) {
  if (pos == 0) tabs_.emplace_back();
  tabs_.back()[w] = pos;
  if (v == root()) ++root_children_;
  if (u != 0) {
    rbar_.write(u, kFalse);
    push_entry({u, false});
  }
  if (shadow_) {
    depth_[w] = depth_[v] + 1;
    sh_r_.resize(depth_[w] + 1);
    sh_r_[depth_[w]] = false;
    if (u != 0) sh_r_[depth_[u]] = false;
  }
  note();
}

void BccSparse::on_back_edge(Vertex y, Vertex x, const BackEdge& be) {
  if (be.parent || color(x) != kGray) return;
  if (shadow_)
    for (std::uint32_t d = depth_[x]; d + 2 <= depth_[y]; ++d) sh_r_[d] = true;
  const std::uint64_t id = stripe_of(x);
  if (on_surface(x)) {
    const auto pos = static_cast<std::int64_t>(pos_of(x));
    while (!su_.empty() && at_or_above(su_.back(), id, pos)) {
      mark_popped(su_.back());
      pop_entry();
    }
    return;
  }
  while (!su_.empty() && stripe_of(su_.back().v) > id) {
    mark_popped(su_.back());
    pop_entry();
  }
  if (!su_.empty() && su_.back().rep && su_.back().v == x) pop_entry();
  rbar_.write(x, kProp);
}

void BccSparse::on_blacken(Vertex w) { tabs_.back().erase(w); }

void BccSparse::on_withdraw(Vertex w, Vertex v, Vertex u) {
  bool P = false;
  if (u != 0) {
    const unsigned r = rbar_.read(u);
    if (r == kProp) throw std::logic_error("propagating mark on the surface at vertex " + std::to_string(u));
    P = r == kTrue;
    shadow_read(u, P);
    if (!su_.empty() && !su_.back().rep && su_.back().v == u) pop_entry();
  }
  if (shadow_) sh_r_.resize(depth_[w]);
  if (P) child_true_.set(v, true);
  switch (which_) {
    case BccKind::cut:
      if (!P && v != root()) cut_.set(v, true);
      break;
    case BccKind::bcc:
      if (!P) emit_class(w, v);
      break;
    case BccKind::bridge:
    case BccKind::tecc: {
      const bool bridge = !P && !child_true_.get(w) && multiplicity(graph(), v, w) == 1;
      if (which_ == BccKind::bridge) {
        if (bridge) bridges_.push_back({v, w});
      } else if (bridge) {
        if (nonbridge_.get(w)) emit_class(w, 0);
        else retire(w);
        em_.vertex(v);
        em_.vertex(w);
        em_.edge(v, w);
        em_.wrap();
      } else {
        nonbridge_.set(v, true);
      }
      break;
    }
  }
  note();
}

void BccSparse::on_root_end(Vertex r) {
  if (which_ == BccKind::cut && root_children_ >= 2) cut_.set(r, true);
  if (which_ == BccKind::tecc && nonbridge_.get(r)) emit_class(r, 0);
  if ((which_ == BccKind::bcc || which_ == BccKind::tecc) && graph().deg(r) == 0) em_.isolated(r);
}

void BccSparse::emit_class(Vertex top, Vertex attach) {
  class_events_.attach = attach;
  inner_.run_from(top, class_events_);
  if (attach != 0) em_.vertex(attach);
  em_.wrap();
}

// Marks a one-vertex class without output.
void BccSparse::retire(Vertex w) {
  DfsEvents none;
  inner_.run_from(w, none);
}

void BccSparse::on_drop(std::uint64_t id, Vertex bottom) {
  tabs_.erase(tabs_.begin());
  std::size_t i = su_.size();
  while (i > 0 && stripe_of(su_[i - 1].v) > id) --i;
  std::size_t j = i;
  while (j > 0 && !su_[j - 1].rep && stripe_of(su_[j - 1].v) == id) --j;
  if (j == i) return;
  su_.erase(su_.begin() + static_cast<std::ptrdiff_t>(j), su_.begin() + static_cast<std::ptrdiff_t>(i));
  su_.insert(su_.begin() + static_cast<std::ptrdiff_t>(j), Entry{bottom, true});
  st_.stack_pops += i - j;
  ++st_.stack_pushes;
}

void BccSparse::on_walk_begin(WalkKind) {
  prop_seen_ = false;
  walk_old_ = ~std::uint64_t{0};
  restored_.clear();
  new_stripes_.clear();
}

// Propagating marks are resolved within each old stripe the walk passes.
void BccSparse::on_walk_vertex(WalkKind k, Vertex x, std::uint64_t old_id, std::uint64_t, std::uint64_t pos,
                               bool stripe_start) {
  if (k == WalkKind::reindex) return;
  if (k == WalkKind::join && old_id != walk_old_) {
    walk_old_ = old_id;
    prop_seen_ = false;
  }
  unsigned r = rbar_.read(x);
  if (r == kProp) prop_seen_ = true;
  if (prop_seen_ && r != kTrue) {
    rbar_.write(x, kTrue);
    r = kTrue;
  }
  switch (k) {
    case WalkKind::restore:
      restored_.emplace_back(x, pos);
      break;
    case WalkKind::split:
      if (stripe_start) new_stripes_.emplace_back(x, false);
      if (r == kFalse) new_stripes_.back().second = true;
      break;
    case WalkKind::join:
      if (new_stripes_.empty()) new_stripes_.emplace_back(x, false);
      if (r == kFalse) new_stripes_.back().second = true;
      break;
    case WalkKind::reindex:
      break;
  }
}

void BccSparse::on_walk_end(WalkKind k) {
  if (k == WalkKind::restore) {
    const std::uint64_t id = stripe_of(restored_.front().first);
    const bool as_current = tabs_.back().empty();
    bool found = false;
    const std::size_t idx = rep_index(id, found);
    if (found) {
      su_.erase(su_.begin() + static_cast<std::ptrdiff_t>(idx));
      ++st_.stack_pops;
    }
    // the top two vertices of a segment that becomes current have no R
    const std::size_t upto = as_current ? restored_.size() - std::min<std::size_t>(2, restored_.size())
                                        : restored_.size();
    std::vector<Entry> ins;
    Table t;
    for (std::size_t i = 0; i < restored_.size(); ++i) {
      auto [x, pos] = restored_[i];
      t[x] = pos;
      if (i >= upto) continue;
      const bool r = rbar_.read(x) != kFalse;
      shadow_read(x, r);
      if (!r) ins.push_back({x, false});
    }
    if (!found && !ins.empty()) throw std::logic_error("buried stripe " + std::to_string(id) + " had no representative");
    su_.insert(su_.begin() + static_cast<std::ptrdiff_t>(idx), ins.begin(), ins.end());
    st_.stack_pushes += ins.size();
    if (as_current) tabs_.back() = std::move(t);
    else tabs_.insert(tabs_.begin(), std::move(t));
  } else if (k == WalkKind::split || k == WalkKind::join) {
    const std::uint64_t id = stripe_of(new_stripes_.front().first);
    std::size_t i = su_.size();
    while (i > 0 && stripe_of(su_[i - 1].v) > id) --i;
    std::size_t j = i;
    while (j > 0 && stripe_of(su_[j - 1].v) == id) {
      if (!su_[j - 1].rep) throw std::logic_error("surface entry inside a buried stripe");
      --j;
    }
    std::vector<Entry> reps;
    for (auto [b, has_false] : new_stripes_)
      if (has_false) reps.push_back({b, true});
    if (j == i && !reps.empty()) throw std::logic_error("buried stripe " + std::to_string(id) + " had no representative");
    su_.erase(su_.begin() + static_cast<std::ptrdiff_t>(j), su_.begin() + static_cast<std::ptrdiff_t>(i));
    su_.insert(su_.begin() + static_cast<std::ptrdiff_t>(j), reps.begin(), reps.end());
    st_.stack_pops += i - j;
    st_.stack_pushes += reps.size();
  }
  note();
}

SparseBccStats BccSparse::solve() {
  DfsEvents none;
  run(none);
  em_.wrap();
  if (which_ == BccKind::cut) {
    bool any = false;
    for (Vertex v = 1; v <= graph().n(); ++v) {
      if (!cut_.get(v)) continue;
      if (!any) out_.begin_component();
      any = true;
      out_.vertex(v);
    }
    if (any) out_.end_component();
  } else if (which_ == BccKind::bridge && !bridges_.empty()) {
    out_.begin_component();
    for (auto [u, v] : bridges_) out_.edge(u, v);
    out_.end_component();
  }
  st_.dfs = stats();
  st_.marks_bits = rbar_.bits();
  return st_;
}

}  // namespace

SparseBccStats bcc_suite_sparse(const AdjGraph& g, BccKind which, OutputSelector output, ComponentSink& out,
                                SparseBccOptions opt) {
  if (g.directed()) throw ModeError("biconnectivity needs an undirected graph");
  if (opt.variant == SparseVariant::loglog) throw std::invalid_argument("use the logstar or fixed-k variant");
  if (opt.segment_size != 0 && opt.segment_size < 3) throw std::invalid_argument("segments need at least 3 vertices");
  const bool shadow = opt.shadow_r || std::getenv("SDFS_SHADOW") != nullptr;
  SparseOptions o;
  o.variant = opt.variant;
  o.k = opt.k;
  o.eager = true;
  o.segment_size = opt.segment_size;
  o.shadow = shadow;
  BccSparse b(g, o, which, output, out, shadow);
  return b.solve();
}

}  // namespace sdfs
