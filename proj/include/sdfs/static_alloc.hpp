#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sdfs {

/// Array A[1..n] whose entry j has a width fixed at construction. The
/// payload is N = sum of widths bits; entry boundaries are recovered with
/// select over the delimiter sequence 0^w1 1 0^w2 1 ... 0^wn 1.
class StaticAllocArray {
 public:
  StaticAllocArray() = default;
  explicit StaticAllocArray(std::span<const unsigned> widths);

  std::uint64_t size() const noexcept { return n_; }
  std::uint64_t payload_bits() const noexcept { return payload_bits_; }

  std::uint64_t read(std::uint64_t j) const;
  void write(std::uint64_t j, std::uint64_t value);
  unsigned width(std::uint64_t j) const;

  /// Delimiters + payload + select directory.
  std::uint64_t bits() const noexcept;

 private:
  struct Window {
    std::uint64_t offset;
    unsigned width;
  };
  Window window(std::uint64_t j) const;
  /// Position of the r-th one (0-based) in the delimiter sequence.
  std::uint64_t select1(std::uint64_t r) const;
  /// Position of the last one strictly before pos, or -1.
  std::int64_t prev_one(std::uint64_t pos) const;

  static constexpr std::uint64_t kBlockBits = 512;
  static constexpr std::uint64_t kSampleRate = 512;

  std::uint64_t n_ = 0;
  std::uint64_t payload_bits_ = 0;
  std::uint64_t delim_bits_ = 0;
  std::vector<std::uint64_t> delim_;
  std::vector<std::uint64_t> payload_;
  std::vector<std::uint64_t> block_rank_;  // ones before each 512-bit block
  std::vector<std::uint32_t> sample_;      // block holding the (k*512)-th one
};

}  // namespace sdfs
