#include "sdfs/dfs_sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <tuple>

namespace sdfs {

RankSchedule RankSchedule::for_n(std::uint64_t n) {
  RankSchedule r;
  const double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  std::uint64_t p = 1;
  while (static_cast<double>(p * p) < lg) p <<= 1;
  r.p.push_back(p);
  while (p > 1) {
    unsigned lp = ceil_log2(p);  // exact, p is a power of two
    p = lp <= 1 ? 1 : std::uint64_t{1} << ceil_log2(lp);
    r.p.push_back(p);
  }
  return r;
}

namespace {

bool shadow_from_env() {
  const char* s = std::getenv("SDFS_SHADOW");
  return s != nullptr && *s != '\0' && std::string(s) != "0";
}

StaticAllocArray uniform_array(std::uint64_t n, unsigned width) {
  std::vector<unsigned> w(n, width);
  return StaticAllocArray(w);
}

}  // namespace

SegmentedDfs::SegmentedDfs(const AdjGraph& g, SparseOptions opt)
    : g_(g), opt_(opt), sched_(RankSchedule::for_n(g.n())), color_(g.n()), walk_mark_(g.n() + 1) {
  const std::uint64_t n = g.n();
  if (opt_.shadow == false) opt_.shadow = shadow_from_env();
  G_ = std::max<std::uint64_t>(1, (g.m() + n - 1) / n);
  const std::uint64_t p1 = sched_.p[0];
  switch (opt_.variant) {
    case SparseVariant::loglog: kmax_ = 1; break;
    case SparseVariant::logstar: kmax_ = sched_.t(); break;
    case SparseVariant::fixed_k: kmax_ = std::clamp(opt_.k, 1u, sched_.t()); break;
  }
  degenerate_ = n <= 64 && opt_.threshold_bits == 0 && opt_.segment_size == 0;
  threshold_ = opt_.threshold_bits != 0 ? opt_.threshold_bits : n;
  seg_size_ = opt_.segment_size != 0 ? std::max<std::uint64_t>(opt_.segment_size, 1)
                                     : std::max<std::uint64_t>(3, (n + p1 * p1 - 1) / (p1 * p1));

  if (opt_.variant == SparseVariant::loglog) {
    // every buried segment holds more than threshold_ turn bits
    std::uint64_t r_max = l_metric(g, -1) / (threshold_ + 1) + 2;
    hue_width_ = std::max(1u, bit_length(r_max));
    hue_ids_ = uniform_array(n, hue_width_);
  } else {
    unsigned len = std::max(1u, bit_length(n / seg_size_ + 2));
    ragged_ids_ = RaggedArray(n, len);
  }

  std::vector<unsigned> cw(n);
  for (Vertex v = 1; v <= n; ++v) {
    std::uint64_t groups = (g.deg(v) + G_ - 1) / G_;
    cw[v - 1] = bit_length(groups);
  }
  counters_ = StaticAllocArray(cw);

  auto& m = stats_.meter;
  h_color_ = m.category("color");
  h_ids_ = m.category(opt_.variant == SparseVariant::loglog ? "hues" : "stripe_ids");
  h_counters_ = m.category("group_counters");
  h_mark_ = m.category("walk_marks");
  h_stack_ = m.category("surface_stack");
  h_trailer_ = m.category("trailer");
  h_stripes_ = m.category("stripes");
  h_regs_ = m.category("registers");
  m.set(h_color_, color_.bits());
  m.set(h_counters_, counters_.bits());
  m.set(h_mark_, walk_mark_.bits());
  // v, k, l, l0, root, w, u, loop counter, walk x, walk k, walk pos, walk id
  reg_w_ = register_width(g);
  m.set(h_regs_, 12ull * reg_w_);
  rank_count_.assign(kmax_ + 1, 0);
  note_space();
}

std::uint64_t SegmentedDfs::stripe_of(Vertex v) const {
  return opt_.variant == SparseVariant::loglog ? hue_ids_.read(v) : ragged_ids_.read_value(v);
}

void SegmentedDfs::set_id(Vertex v, std::uint64_t id) {
  if (opt_.variant == SparseVariant::loglog) {
    if (bit_length(id) > hue_width_) throw std::logic_error("hue " + std::to_string(id) + " exceeds its field");
    hue_ids_.write(v, id);
  } else {
    ragged_ids_.write_value(v, id);
  }
}

void SegmentedDfs::clear_id(Vertex v) {
  if (opt_.variant != SparseVariant::loglog) ragged_ids_.write_value(v, 0);
}

bool SegmentedDfs::on_surface(Vertex v) const {
  if (color_.read(v) != kGray) return false;
  std::uint64_t id = stripe_of(v);
  return id == top_id() || (segs_.size() == 2 && id + 1 == top_id());
}

unsigned SegmentedDfs::surface_slot(Vertex v) const { return stripe_of(v) == top_id() ? 0 : 1; }

std::uint64_t SegmentedDfs::surface_vertices() const noexcept {
  std::uint64_t c = 0;
  for (const auto& s : segs_) c += s.count;
  return c;
}

void SegmentedDfs::check_stripe_order() const {
  for (std::size_t i = 1; i < ranks_.size(); ++i)
    if (ranks_[i] > ranks_[i - 1]) throw std::logic_error("stripe ranks are not nonincreasing");
  for (std::size_t i = 1; i < ranks_.size(); ++i)
    if (first_seg_[i] != first_seg_[i - 1] + sched_.segments_in(ranks_[i - 1]))
      throw std::logic_error("stripe extents are not contiguous");
}

void SegmentedDfs::note_space() {
  auto& m = stats_.meter;
  std::uint64_t sb = 0;
  for (const auto& s : segs_) sb += s.turns.size_bits();
  stats_.stack_peak_bits = std::max(stats_.stack_peak_bits, sb);
  m.set(h_stack_, sb);
  const std::uint64_t vw = bit_length(g_.n()), rw = reg_w_;
  m.set(h_trailer_, trailer_.size() * (vw + rw));
  m.set(h_stripes_, ranks_.size() * (bit_length(kmax_) + bit_length(trailer_.size() + 1)) +
                        rank_count_.size() * bit_length(ranks_.size() + 1));
  m.set(h_ids_, opt_.variant == SparseVariant::loglog ? hue_ids_.bits() : ragged_ids_.bits());
}

bool SegmentedDfs::segment_complete() const {
  if (degenerate_) return false;
  const Segment& top = segs_.back();
  if (opt_.variant == SparseVariant::loglog) return top.turns.size_bits() > threshold_;
  return top.count >= seg_size_;
}

std::pair<Vertex, std::int64_t> SegmentedDfs::segment_bottom(std::uint64_t q) const {
  if (q == 0) return {root_, -1};
  const Trail& t = trailer_[q - 1];
  return {g_.head(t.last, t.slot), static_cast<std::int64_t>(g_.mate(t.last, t.slot))};
}

// The child of x on the gray path is the first neighbor, scanning from the
// start of x's explored group, that is gray in the same stripe and not yet
// walked (or, when clearing, the first one still marked).
std::optional<Slot> SegmentedDfs::find_child(Vertex x, std::int64_t kx, std::uint64_t id, bool by_mark) {
  const std::int64_t d = g_.deg(x);
  const std::int64_t last = x == root_ ? d : d - 1;
  for (std::int64_t t = static_cast<std::int64_t>(counters_.read(x) * G_); t < last; ++t) {
    Slot s = static_cast<Slot>(((kx + t + 1) % d + d) % d);
    if (!g_.outgoing(x, s)) continue;
    ++stats_.inspections;
    Vertex y = g_.head(x, s);
    if (by_mark) {
      if (walk_mark_.get(y)) return s;
      continue;
    }
    if (walk_mark_.get(y) || !admissible(y) || color_.read(y) != kGray) continue;
    if (stripe_of(y) == id) return s;
  }
  return std::nullopt;
}

template <class F>
void SegmentedDfs::walk(std::uint64_t seg_a, std::uint64_t seg_b, F&& f) {
  for (int pass = 0; pass < 2; ++pass) {
    const bool clearing = pass == 1;
    for (std::uint64_t q = seg_a; q <= seg_b; ++q) {
      auto [x, kx] = segment_bottom(q);
      const bool closed = q < trailer_.size();
      const Vertex last = closed ? trailer_[q].last : v_;
      const std::uint64_t id = clearing ? 0 : stripe_of(x);
      for (std::uint64_t pos = 0;; ++pos) {
        std::optional<Slot> cs;
        if (x != last) {
          cs = find_child(x, kx, id, clearing);
          if (!cs) throw std::logic_error("gray path broken below vertex " + std::to_string(x));
        } else if (closed) {
          cs = trailer_[q].slot;
        }
        walk_mark_.set(x, !clearing);
        if (!clearing) f(x, kx, cs, q, pos);
        if (x == last) break;
        Vertex y = g_.head(x, *cs);
        kx = g_.mate(x, *cs);
        x = y;
      }
    }
  }
}

void SegmentedDfs::run(DfsEvents& ev) {
  for (Vertex r = 1; r <= g_.n(); ++r)
    if (color_.read(r) == kWhite && admissible(r)) tree(r, ev);
}

void SegmentedDfs::run_from(Vertex root, DfsEvents& ev) {
  if (color_.read(root) != kWhite) throw std::logic_error("root " + std::to_string(root) + " is not white");
  tree(root, ev);
}

void SegmentedDfs::tree(Vertex r, DfsEvents& ev) {
  ev_ = &ev;
  root_ = v_ = r;
  k_ = -1;
  l_ = -1;
  l0_ = 0;
  segs_.clear();
  trailer_.clear();
  ranks_.clear();
  first_seg_.clear();
  std::fill(rank_count_.begin(), rank_count_.end(), 0);
  shadow_.clear();
  segs_.push_back(Segment{});
  segs_.back().bottom = r;
  segs_.back().count = 1;
  ++stats_.segments;
  stats_.hues_used = std::max<std::uint64_t>(stats_.hues_used, 1);
  color_.write(r, kGray);
  set_id(r, 0);
  on_root_begin(r);
  ev.preprocess(r);

  for (;;) {
    ++l_;
    const std::int64_t d = g_.deg(v_);
    if (l_ < d) {
      Slot s = static_cast<Slot>(((k_ + l_ + 1) % d + d) % d);
      if (!g_.outgoing(v_, s)) continue;
      ++stats_.inspections;
      Vertex w = g_.head(v_, s);
      if (!admissible(w)) continue;
      if (color_.read(w) == kWhite) {
        ev.explore_tree_edge(v_, w, s);
        descend(w, s);
        ev.preprocess(w);
      } else {
        BackEdge be{s, static_cast<Slot>(l_), !g_.directed() && v_ != root_ && l_ == d - 1};
        ev.handle_back_edge(v_, w, be);
        on_back_edge(v_, w, be);
      }
      continue;
    }
    if (v_ == root_) break;

    ++stats_.inspections;
    const Slot ks = static_cast<Slot>(k_);
    const Vertex w = v_;
    const Vertex u = g_.head(w, ks);
    const std::int64_t du = g_.deg(u);
    color_.write(w, kBlack);
    on_blacken(w);
    clear_id(w);
    if (--segs_.back().count == 0) withdraw_segment();
    if (u == root_) l_ = l0_;
    else if (du <= 2) l_ = 0;
    else l_ = static_cast<std::int64_t>(segs_.back().turns.pop(static_cast<Slot>(du)));
    k_ = ((static_cast<std::int64_t>(g_.mate(w, ks)) - (l_ + 1)) % du + du) % du;
    v_ = u;
    note_space();
    ev.postprocess(w);
    ev.retreat_tree_edge(u, w, static_cast<Slot>((k_ + l_ + 1) % du));
    Vertex pu = 0;
    if (u != root_) {
      ++stats_.inspections;
      pu = g_.head(u, static_cast<Slot>(k_));
    }
    on_withdraw(w, u, pu);
    if (opt_.eager && segs_.size() == 1 && segs_.back().count == 2 && !ranks_.empty()) restore_top(false);
  }

  color_.write(r, kBlack);
  clear_id(r);
  segs_.clear();
  note_space();
  ev.postprocess(r);
  on_root_end(r);
  ev_ = nullptr;
}

void SegmentedDfs::descend(Vertex w, Slot s) {
  const Vertex v = v_;
  const std::int64_t d = g_.deg(v);
  const std::int64_t kv = k_;
  if (v == root_) l0_ = l_;
  else if (d > 2) segs_.back().turns.push(static_cast<std::uint64_t>(l_), static_cast<Slot>(d));
  counters_.write(v, static_cast<std::uint64_t>(l_) / G_);
  k_ = g_.mate(v, s);
  l_ = -1;
  v_ = w;
  color_.write(w, kGray);
  if (segment_complete()) close_current(v, s, w);
  Segment& top = segs_.back();
  const std::uint64_t pos = top.count++;
  set_id(w, top_id());
  maybe_join();
  Vertex u = 0;
  if (v != root_) {
    ++stats_.inspections;
    u = g_.head(v, static_cast<Slot>(kv));
  }
  note_space();
  on_discover(w, v, u, pos);
}

void SegmentedDfs::close_current(Vertex v, Slot s, Vertex w) {
  trailer_.push_back({v, s});
  first_seg_.push_back(segs_.back().ordinal);
  ranks_.push_back(1);
  ++rank_count_[1];
  if (segs_.size() == 2) drop_lower();
  Segment next;
  next.bottom = w;
  next.bottom_k = k_;
  next.ordinal = trailer_.size();
  segs_.push_back(std::move(next));
  ++stats_.segments;
  stats_.hues_used = std::max<std::uint64_t>(stats_.hues_used, trailer_.size() + 1);
}

void SegmentedDfs::drop_lower() {
  Segment& low = segs_.front();
  if (opt_.shadow) {
    if (shadow_.size() <= low.ordinal) shadow_.resize(low.ordinal + 1);
    shadow_[low.ordinal] = low.turns;
  }
  on_drop(stripe_of(low.bottom), low.bottom);
  segs_.erase(segs_.begin());
  ++stats_.drops;
}

void SegmentedDfs::promote() {
  segs_.pop_back();
  ranks_.pop_back();
  first_seg_.pop_back();
  --rank_count_[1];
  trailer_.pop_back();
  on_promote();
}

void SegmentedDfs::withdraw_segment() {
  if (segs_.size() == 2) promote();
  else restore_top(true);
}

void SegmentedDfs::restore_top(bool as_current) {
  while (ranks_.back() > 1) split_top();
  const std::uint64_t q = first_seg_.back();
  Segment seg;
  std::tie(seg.bottom, seg.bottom_k) = segment_bottom(q);
  seg.ordinal = q;
  on_walk_begin(WalkKind::restore);
  walk(q, q, [&](Vertex x, std::int64_t kx, std::optional<Slot> cs, std::uint64_t, std::uint64_t pos) {
    const std::int64_t d = g_.deg(x);
    if (x != root_ && d > 2 && cs) {
      std::int64_t turn = ((static_cast<std::int64_t>(*cs) - kx - 1) % d + d) % d;
      seg.turns.push(static_cast<std::uint64_t>(turn), static_cast<Slot>(d));
    }
    ++seg.count;
    std::uint64_t id = top_id() - 1;
    on_walk_vertex(WalkKind::restore, x, id, id, pos, pos == 0);
  });
  on_walk_end(WalkKind::restore);
  ++stats_.restorations;
  stats_.restore_vertices += seg.count;
  if (opt_.shadow) shadow_check(q, seg.turns);
  if (as_current) {
    segs_.back() = std::move(seg);
    ranks_.pop_back();
    first_seg_.pop_back();
    --rank_count_[1];
    trailer_.pop_back();
  } else {
    segs_.insert(segs_.begin(), std::move(seg));
  }
  note_space();
}

void SegmentedDfs::shadow_check(std::uint64_t ordinal, const BitStack& rebuilt) {
  if (ordinal >= shadow_.size())
    throw ShadowMismatch("segment " + std::to_string(ordinal) + " restored without a recorded copy");
  if (!shadow_[ordinal].same_content(rebuilt))
    throw ShadowMismatch("restored segment " + std::to_string(ordinal) + " differs from its dropped copy (" +
                         std::to_string(rebuilt.size_bits()) + " vs " +
                         std::to_string(shadow_[ordinal].size_bits()) + " bits)");
}

void SegmentedDfs::split_top() {
  const std::uint64_t X = ranks_.size() - 1;
  const unsigned i = ranks_[X];
  const std::uint64_t c = sched_.join_width(i);
  const std::uint64_t per = sched_.segments_in(i - 1);
  const std::uint64_t a = first_seg_[X];
  const std::uint64_t top_ord = trailer_.size();
  const std::uint64_t end = segs_.back().count > 0 ? top_ord : top_ord - 1;
  on_walk_begin(WalkKind::split);
  walk(a, end, [&](Vertex x, std::int64_t, std::optional<Slot>, std::uint64_t q, std::uint64_t pos) {
    if (q == top_ord) {
      set_id(x, X + c);
      on_walk_vertex(WalkKind::reindex, x, X + 1, X + c, pos, pos == 0);
      return;
    }
    std::uint64_t sub = (q - a) / per;
    set_id(x, X + sub);
    on_walk_vertex(WalkKind::split, x, X, X + sub, pos, pos == 0 && (q - a) % per == 0);
    ++stats_.split_join_vertices;
  });
  ranks_[X] = static_cast<std::uint8_t>(i - 1);
  for (std::uint64_t j = 1; j < c; ++j) {
    ranks_.push_back(static_cast<std::uint8_t>(i - 1));
    first_seg_.push_back(a + j * per);
  }
  --rank_count_[i];
  rank_count_[i - 1] += c;
  ++stats_.splits;
  on_walk_end(WalkKind::split);
}

void SegmentedDfs::maybe_join() {
  for (unsigned i = 2; i <= kmax_; ++i) {
    const std::uint64_t c = sched_.join_width(i);
    if (rank_count_[i - 1] < 2 * c) continue;
    std::uint64_t a = 0;
    for (unsigned r = i; r <= kmax_; ++r) a += rank_count_[r];
    const std::uint64_t top_ord = trailer_.size();
    const std::uint64_t join_end = first_seg_[a + c - 1] + sched_.segments_in(i - 1);
    on_walk_begin(WalkKind::join);
    walk(first_seg_[a], top_ord, [&](Vertex x, std::int64_t, std::optional<Slot>, std::uint64_t q, std::uint64_t pos) {
      const std::uint64_t old = stripe_of(x);
      if (q < join_end) {
        set_id(x, a);
        on_walk_vertex(WalkKind::join, x, old, a, pos, pos == 0 && (q - first_seg_[a]) % sched_.segments_in(i - 1) == 0);
        ++stats_.split_join_vertices;
      } else {
        set_id(x, old - (c - 1));
        on_walk_vertex(WalkKind::reindex, x, old, old - (c - 1), pos, pos == 0);
      }
    });
    ranks_[a] = static_cast<std::uint8_t>(i);
    ranks_.erase(ranks_.begin() + static_cast<std::ptrdiff_t>(a + 1), ranks_.begin() + static_cast<std::ptrdiff_t>(a + c));
    first_seg_.erase(first_seg_.begin() + static_cast<std::ptrdiff_t>(a + 1),
                     first_seg_.begin() + static_cast<std::ptrdiff_t>(a + c));
    rank_count_[i - 1] -= c;
    ++rank_count_[i];
    ++stats_.joins;
    on_walk_end(WalkKind::join);
  }
}

DfsStats dfs_loglog(const AdjGraph& g, DfsEvents& ev, SparseOptions opt) {
  opt.variant = SparseVariant::loglog;
  SegmentedDfs d(g, opt);
  d.run(ev);
  return d.stats();
}

DfsStats dfs_logstar(const AdjGraph& g, DfsEvents& ev, SparseOptions opt) {
  opt.variant = SparseVariant::logstar;
  SegmentedDfs d(g, opt);
  d.run(ev);
  return d.stats();
}

DfsStats dfs_fixed_k(const AdjGraph& g, unsigned k, DfsEvents& ev, SparseOptions opt) {
  opt.variant = SparseVariant::fixed_k;
  opt.k = k;
  SegmentedDfs d(g, opt);
  d.run(ev);
  return d.stats();
}

}  // namespace sdfs
