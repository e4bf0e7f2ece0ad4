#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdfs/packed.hpp"

namespace sdfs {

/// Short binary string; character k is bit k of `bits`.
struct BitString {
  std::uint64_t bits = 0;
  unsigned len = 0;

  static BitString from_string(std::string_view s);
  /// Minimal binary representation of v, most significant bit last; 0 is "".
  static BitString from_value(std::uint64_t v) noexcept { return {v, bit_length_of(v)}; }
  std::string to_string() const;
  std::uint64_t value() const noexcept { return bits; }
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  static unsigned bit_length_of(std::uint64_t v) noexcept {
    unsigned r = 0;
    for (; v != 0; v >>= 1) ++r;
    return r;
  }
};

/// Array of M strings of up to `max_len` bits each (any length, not just
/// up to 64). Strings are grouped h at a time; the strings of one group that
/// share a length form a pile, which lives in a container carved out of one
/// shared store by a bump allocator. Containers are twice the pile size when
/// (re)allocated, and a pile that falls below a quarter of its container is
/// moved. The store is compacted once dead space exceeds live space plus M.
class RaggedCore {
 public:
  RaggedCore() = default;
  RaggedCore(std::uint64_t count, unsigned max_len, unsigned group_size);

  std::uint64_t size() const noexcept { return count_; }
  unsigned max_len() const noexcept { return max_len_; }
  unsigned length(std::uint64_t i) const { return static_cast<unsigned>(len_.get(i)); }

  /// Copies string i into out (resized to whole words), returns its length.
  unsigned read(std::uint64_t i, std::vector<std::uint64_t>& out) const;
  void write(std::uint64_t i, const std::uint64_t* words, unsigned len);

  std::uint64_t bits() const noexcept;
  std::uint64_t live_bits() const noexcept { return live_; }
  std::uint64_t dead_bits() const noexcept { return dead_; }
  std::uint64_t migrations() const noexcept { return migrations_; }
  std::uint64_t collections() const noexcept { return collections_; }

  /// Throws std::logic_error if a container or collector invariant fails.
  void check_invariants() const;
  void set_checking(bool on) noexcept { checking_ = on; }

 private:
  std::uint64_t pile_id(std::uint64_t group, unsigned len) const noexcept {
    return group * (max_len_ + 1) + len;
  }
  unsigned entry_width(unsigned len) const noexcept { return len + owner_width_; }
  std::uint64_t allocate(std::uint64_t bits);
  void move_pile(std::uint64_t pid, unsigned len, std::uint64_t new_cap);
  void remove(std::uint64_t i);
  void insert(std::uint64_t i, const std::uint64_t* words, unsigned len);
  void copy_bits(std::uint64_t dst, const std::vector<std::uint64_t>& src_store, std::uint64_t src,
                 std::uint64_t n);
  void maybe_collect();

  std::uint64_t count_ = 0;
  unsigned max_len_ = 0;
  std::uint64_t h_ = 1;
  unsigned owner_width_ = 0;
  PackedArray len_;
  PackedArray pos_;
  PackedArray pile_count_;
  PackedArray pile_cap_;
  PackedArray pile_off_;
  std::vector<std::uint64_t> store_;
  std::uint64_t free_ = 0;
  std::uint64_t live_ = 0;
  std::uint64_t dead_ = 0;
  std::uint64_t migrations_ = 0;
  std::uint64_t collections_ = 0;
  bool checking_ = false;
};

/// Array of n binary strings of at most `max_len` <= 64 bits each, initially
/// empty. Consecutive strings are packed into blobs of q ~ log log n strings;
/// a blob is stored as the label 1^|s|0 s for each of its strings, and the
/// labels live in a RaggedCore.
class RaggedArray {
 public:
  RaggedArray() = default;
  RaggedArray(std::uint64_t n, unsigned max_len);

  std::uint64_t size() const noexcept { return n_; }
  unsigned max_len() const noexcept { return max_len_; }
  unsigned blob_size() const noexcept { return q_; }

  /// 1-based.
  BitString read(std::uint64_t i) const;
  void write(std::uint64_t i, BitString s);
  /// Empty string reads as 0.
  std::uint64_t read_value(std::uint64_t i) const { return read(i).value(); }
  void write_value(std::uint64_t i, std::uint64_t v) { write(i, BitString::from_value(v)); }

  std::uint64_t bits() const noexcept { return core_.bits(); }
  const RaggedCore& core() const noexcept { return core_; }
  void set_checking(bool on) noexcept { core_.set_checking(on); }

 private:
  void decode(std::uint64_t blob, std::vector<BitString>& out) const;

  std::uint64_t n_ = 0;
  unsigned max_len_ = 0;
  unsigned q_ = 1;
  RaggedCore core_;
  mutable std::vector<std::uint64_t> scratch_;
};

}  // namespace sdfs
