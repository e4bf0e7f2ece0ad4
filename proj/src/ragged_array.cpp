#include "sdfs/ragged_array.hpp"

#include <algorithm>
#include <stdexcept>

#include "sdfs/graph.hpp"

namespace sdfs {

BitString BitString::from_string(std::string_view s) {
  if (s.size() > 64) throw std::invalid_argument("bit string longer than 64");
  BitString b;
  b.len = static_cast<unsigned>(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '1') b.bits |= std::uint64_t{1} << k;
    else if (s[k] != '0') throw std::invalid_argument("bit string may only hold 0 and 1");
  }
  return b;
}

std::string BitString::to_string() const {
  std::string s(len, '0');
  for (unsigned k = 0; k < len; ++k)
    if ((bits >> k) & 1) s[k] = '1';
  return s;
}

RaggedCore::RaggedCore(std::uint64_t count, unsigned max_len, unsigned group_size)
    : count_(count), max_len_(max_len), h_(std::max(1u, group_size)) {
  owner_width_ = bit_length(h_ - 1);
  std::uint64_t groups = (count + h_ - 1) / h_;
  len_ = PackedArray(count, bit_length(max_len));
  pos_ = PackedArray(count, bit_length(h_ - 1));
  std::uint64_t piles = groups * (max_len + 1);
  pile_count_ = PackedArray(piles, bit_length(h_));
  pile_cap_ = PackedArray(piles, bit_length(2 * h_));
  // store size stays below 2 * live + count + two containers between collections
  std::uint64_t bound = 16 * (count + 1) * (max_len + owner_width_ + 1) + 2 * count + 1024;
  pile_off_ = PackedArray(piles, bit_length(bound));
}

std::uint64_t RaggedCore::allocate(std::uint64_t bits) {
  std::uint64_t off = free_;
  free_ += bits;
  if (store_.size() * 64 < free_ + 64) store_.resize((free_ + 64) / 64 + 1 + store_.size() / 2, 0);
  return off;
}

void RaggedCore::copy_bits(std::uint64_t dst, const std::vector<std::uint64_t>& src_store,
                           std::uint64_t src, std::uint64_t n) {
  while (n > 0) {
    unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(64, n));
    set_field(store_.data(), dst, w, get_field(src_store.data(), src, w));
    dst += w;
    src += w;
    n -= w;
  }
}

void RaggedCore::move_pile(std::uint64_t pid, unsigned len, std::uint64_t new_cap) {
  std::uint64_t ew = entry_width(len);
  std::uint64_t old_cap = pile_cap_.get(pid);
  std::uint64_t cnt = pile_count_.get(pid);
  std::uint64_t old_off = pile_off_.get(pid);
  if (old_cap > 0) {
    dead_ += old_cap * ew;
    live_ -= old_cap * ew;
  }
  if (new_cap == 0) {
    pile_cap_.set(pid, 0);
    pile_off_.set(pid, 0);
    return;
  }
  std::uint64_t off = allocate(new_cap * ew);
  if (cnt > 0) copy_bits(off, store_, old_off, cnt * ew);
  live_ += new_cap * ew;
  pile_cap_.set(pid, new_cap);
  pile_off_.set(pid, off);
  ++migrations_;
}

void RaggedCore::remove(std::uint64_t i) {
  unsigned len = length(i);
  if (len == 0) return;
  std::uint64_t g = i / h_;
  std::uint64_t pid = pile_id(g, len);
  std::uint64_t ew = entry_width(len);
  std::uint64_t cnt = pile_count_.get(pid);
  std::uint64_t p = pos_.get(i);
  std::uint64_t off = pile_off_.get(pid);
  if (p + 1 != cnt) {
    copy_bits(off + p * ew, store_, off + (cnt - 1) * ew, ew);
    std::uint64_t owner = get_field(store_.data(), off + p * ew, owner_width_);
    pos_.set(g * h_ + owner, p);
  }
  --cnt;
  pile_count_.set(pid, cnt);
  std::uint64_t cap = pile_cap_.get(pid);
  if (cnt == 0) move_pile(pid, len, 0);
  else if (4 * cnt < cap) move_pile(pid, len, 2 * cnt);
}

void RaggedCore::insert(std::uint64_t i, const std::uint64_t* words, unsigned len) {
  len_.set(i, len);
  if (len == 0) return;
  std::uint64_t g = i / h_;
  std::uint64_t pid = pile_id(g, len);
  std::uint64_t ew = entry_width(len);
  std::uint64_t cnt = pile_count_.get(pid);
  if (cnt == pile_cap_.get(pid)) move_pile(pid, len, 2 * (cnt + 1));
  std::uint64_t at = pile_off_.get(pid) + cnt * ew;
  set_field(store_.data(), at, owner_width_, i - g * h_);
  at += owner_width_;
  for (unsigned k = 0; k < len; k += 64) {
    unsigned w = std::min(64u, len - k);
    set_field(store_.data(), at + k, w, words[k / 64] & low_bits(w));
  }
  pos_.set(i, cnt);
  pile_count_.set(pid, cnt + 1);
}

void RaggedCore::maybe_collect() {
  if (dead_ <= live_ + count_) return;
  std::vector<std::uint64_t> old;
  old.swap(store_);
  store_.assign(live_ / 64 + 2, 0);
  free_ = 0;
  for (std::uint64_t pid = 0; pid < pile_cap_.size(); ++pid) {
    std::uint64_t cap = pile_cap_.get(pid);
    if (cap == 0) continue;
    unsigned len = static_cast<unsigned>(pid % (max_len_ + 1));
    std::uint64_t ew = entry_width(len);
    std::uint64_t off = allocate(cap * ew);
    copy_bits(off, old, pile_off_.get(pid), pile_count_.get(pid) * ew);
    pile_off_.set(pid, off);
  }
  dead_ = 0;
  ++collections_;
}

unsigned RaggedCore::read(std::uint64_t i, std::vector<std::uint64_t>& out) const {
  if (i >= count_) throw std::out_of_range("ragged index out of range");
  unsigned len = length(i);
  out.assign((len + 63) / 64, 0);
  if (len == 0) return 0;
  std::uint64_t pid = pile_id(i / h_, len);
  std::uint64_t at = pile_off_.get(pid) + pos_.get(i) * entry_width(len) + owner_width_;
  for (unsigned k = 0; k < len; k += 64) out[k / 64] = get_field(store_.data(), at + k, std::min(64u, len - k));
  return len;
}

void RaggedCore::write(std::uint64_t i, const std::uint64_t* words, unsigned len) {
  if (i >= count_) throw std::out_of_range("ragged index out of range");
  if (len > max_len_)
    throw std::invalid_argument("string of " + std::to_string(len) + " bits exceeds cap " +
                                std::to_string(max_len_));
  unsigned old = length(i);
  if (old == len && len > 0) {
    std::uint64_t pid = pile_id(i / h_, len);
    std::uint64_t at = pile_off_.get(pid) + pos_.get(i) * entry_width(len) + owner_width_;
    for (unsigned k = 0; k < len; k += 64) {
      unsigned w = std::min(64u, len - k);
      set_field(store_.data(), at + k, w, words[k / 64] & low_bits(w));
    }
  } else if (old != len) {
    remove(i);
    insert(i, words, len);
    maybe_collect();
  }
  if (checking_) check_invariants();
}

std::uint64_t RaggedCore::bits() const noexcept {
  return len_.bits() + pos_.bits() + pile_count_.bits() + pile_cap_.bits() + pile_off_.bits() +
         free_ + 4 * 64;
}

void RaggedCore::check_invariants() const {
  std::uint64_t live = 0;
  for (std::uint64_t pid = 0; pid < pile_cap_.size(); ++pid) {
    std::uint64_t cap = pile_cap_.get(pid), cnt = pile_count_.get(pid);
    if (cnt > cap) throw std::logic_error("pile larger than its container");
    if (cap > 0 && 4 * cnt < cap) throw std::logic_error("pile below a quarter of its container");
    if (cap > 0 && cnt == 0) throw std::logic_error("empty pile holds a container");
    live += cap * entry_width(static_cast<unsigned>(pid % (max_len_ + 1)));
  }
  if (live != live_) throw std::logic_error("live space bookkeeping drifted");
  if (free_ != live_ + dead_) throw std::logic_error("free offset does not match live + dead");
  if (dead_ > live_ + count_) throw std::logic_error("dead space above live + n");
}

namespace {

unsigned blob_size_for(std::uint64_t n) {
  return std::max(1u, bit_length(bit_length(n)));
}

}  // namespace

RaggedArray::RaggedArray(std::uint64_t n, unsigned max_len)
    : n_(n), max_len_(max_len), q_(blob_size_for(n)) {
  if (max_len > 64) throw std::invalid_argument("ragged strings are capped at 64 bits");
  std::uint64_t blobs = (n + q_ - 1) / q_;
  unsigned lg = std::max(1u, bit_length(blobs));
  core_ = RaggedCore(blobs, q_ * (2 * max_len + 1), lg * lg);
}

void RaggedArray::decode(std::uint64_t blob, std::vector<BitString>& out) const {
  unsigned len = core_.read(blob, scratch_);
  out.assign(q_, BitString{});
  // a blob with every string empty is the empty label
  if (len == 0) return;
  std::uint64_t at = 0;
  for (unsigned k = 0; k < q_; ++k) {
    unsigned l = 0;
    while (get_field(scratch_.data(), at, 1) == 1) {
      ++l;
      ++at;
    }
    ++at;
    out[k] = {get_field(scratch_.data(), at, l), l};
    at += l;
  }
}

BitString RaggedArray::read(std::uint64_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("ragged index out of range");
  std::vector<BitString> parts;
  decode((i - 1) / q_, parts);
  return parts[(i - 1) % q_];
}

void RaggedArray::write(std::uint64_t i, BitString s) {
  if (i < 1 || i > n_) throw std::out_of_range("ragged index out of range");
  if (s.len > max_len_)
    throw std::invalid_argument("string of " + std::to_string(s.len) + " bits exceeds cap " +
                                std::to_string(max_len_));
  s.bits &= low_bits(s.len);
  std::uint64_t blob = (i - 1) / q_;
  std::vector<BitString> parts;
  decode(blob, parts);
  parts[(i - 1) % q_] = s;
  bool all_empty = std::all_of(parts.begin(), parts.end(), [](const BitString& b) { return b.len == 0; });
  std::vector<std::uint64_t> label((q_ * (2 * max_len_ + 1) + 63) / 64 + 1, 0);
  std::uint64_t at = 0;
  if (!all_empty) {
    for (const auto& p : parts) {
      for (unsigned k = 0; k < p.len; ++k) set_field(label.data(), at++, 1, 1);
      set_field(label.data(), at++, 1, 0);
      set_field(label.data(), at, p.len, p.bits);
      at += p.len;
    }
  }
  core_.write(blob, label.data(), static_cast<unsigned>(at));
}

}  // namespace sdfs
