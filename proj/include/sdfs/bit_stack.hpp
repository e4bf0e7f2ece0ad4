#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sdfs/graph.hpp"

namespace sdfs {

class StackUnderflow : public std::logic_error {
 public:
  StackUnderflow() : std::logic_error("pop from an empty bit stack") {}
};

/// Stack of variable-width bit fields packed into 64-bit words.
class BitStack {
 public:
  /// Width of a turn-value entry of a vertex of degree d >= 3, ceil(log2(d-1)).
  static constexpr unsigned entry_width(Slot d) noexcept { return ceil_log2(d - 1); }

  void push_bits(std::uint64_t value, unsigned width);
  std::uint64_t pop_bits(unsigned width);
  std::uint64_t peek_bits(unsigned width) const;

  void push(std::uint64_t turn, Slot d);
  std::uint64_t pop(Slot d);

  std::uint64_t size_bits() const noexcept { return bits_; }
  std::uint64_t peak_bits() const noexcept { return peak_; }
  bool empty() const noexcept { return bits_ == 0; }
  void clear() noexcept { bits_ = 0; }
  void reset_peak() noexcept { peak_ = bits_; }
  /// Same length and same bits; the peak is ignored.
  bool same_content(const BitStack& o) const noexcept;

 private:
  std::vector<std::uint64_t> words_;
  std::uint64_t bits_ = 0;
  std::uint64_t peak_ = 0;
};

/// Turn-value stack that packs the entries of degree-4, -6 and -7 vertices
/// in groups (5 base-3 digits in 8 bits, 3 base-5 digits in 7 bits, 3
/// base-6 digits in 8 bits). An incomplete group waits in a small staging
/// register per degree class; all other degrees go straight to the
/// underlying BitStack.
class GroupedStack {
 public:
  struct GroupClass {
    Slot degree;
    unsigned group_size;
    unsigned packed_width;
  };
  static constexpr std::array<GroupClass, 3> kClasses{{{4, 5, 8}, {6, 3, 7}, {7, 3, 8}}};

  void push(std::uint64_t turn, Slot d);
  std::uint64_t pop(Slot d);

  std::uint64_t stack_bits() const noexcept { return stack_.size_bits(); }
  /// Bits held by staged entries at their individual width.
  std::uint64_t staging_bits() const noexcept;
  std::uint64_t size_bits() const noexcept { return stack_bits() + staging_bits(); }
  std::uint64_t peak_bits() const noexcept { return peak_; }
  bool empty() const noexcept;
  void clear() noexcept;

  const BitStack& packed() const noexcept { return stack_; }

 private:
  struct Staging {
    std::array<std::uint8_t, 5> digits{};
    unsigned count = 0;
  };
  static int class_of(Slot d) noexcept {
    switch (d) {
      case 4: return 0;
      case 6: return 1;
      case 7: return 2;
      default: return -1;
    }
  }
  void note_size() noexcept {
    auto s = size_bits();
    if (s > peak_) peak_ = s;
  }

  BitStack stack_;
  std::array<Staging, 3> staging_{};
  std::uint64_t peak_ = 0;
};

}  // namespace sdfs
