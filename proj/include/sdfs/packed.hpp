#pragma once

#include <cstdint>
#include <vector>

namespace sdfs {

constexpr std::uint64_t low_bits(unsigned width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Reads a width-bit field starting at bit pos of a word array.
inline std::uint64_t get_field(const std::uint64_t* words, std::uint64_t pos, unsigned width) noexcept {
  if (width == 0) return 0;
  unsigned off = pos % 64;
  const std::uint64_t* w = words + pos / 64;
  std::uint64_t v = w[0] >> off;
  if (off + width > 64) v |= w[1] << (64 - off);
  return v & low_bits(width);
}

inline void set_field(std::uint64_t* words, std::uint64_t pos, unsigned width, std::uint64_t value) noexcept {
  if (width == 0) return;
  unsigned off = pos % 64;
  std::uint64_t* w = words + pos / 64;
  std::uint64_t mask = low_bits(width);
  w[0] = (w[0] & ~(mask << off)) | (value << off);
  if (off + width > 64) {
    unsigned hi = 64 - off;
    w[1] = (w[1] & ~(mask >> hi)) | (value >> hi);
  }
}

/// Plain bit array indexed 1..n.
class BitArray {
 public:
  explicit BitArray(std::uint64_t n = 0) : n_(n), words_((n + 64) / 64, 0) {}
  bool get(std::uint64_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::uint64_t i, bool b) noexcept {
    std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (b) words_[i / 64] |= bit;
    else words_[i / 64] &= ~bit;
  }
  void fill(bool b) noexcept {
    for (auto& w : words_) w = b ? ~std::uint64_t{0} : 0;
  }
  std::uint64_t size() const noexcept { return n_; }
  /// Accounted as n bits; the one spare bit of index 0 is not charged.
  std::uint64_t bits() const noexcept { return n_; }

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> words_;
};

/// Fixed-width unsigned integers packed back to back, indexed from 0.
class PackedArray {
 public:
  PackedArray() = default;
  PackedArray(std::uint64_t size, unsigned width)
      : size_(size), width_(width), words_((size * width + 127) / 64, 0) {}
  std::uint64_t get(std::uint64_t i) const noexcept { return get_field(words_.data(), i * width_, width_); }
  void set(std::uint64_t i, std::uint64_t v) noexcept { set_field(words_.data(), i * width_, width_, v); }
  std::uint64_t size() const noexcept { return size_; }
  unsigned width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return size_ * width_; }

 private:
  std::uint64_t size_ = 0;
  unsigned width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sdfs
