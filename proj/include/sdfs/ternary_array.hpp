#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sdfs/packed.hpp"

namespace sdfs {

/// Array of n trits. Blocks of 17 trits are stored as a base-3 number in
/// 27 bits (3^17 < 2^27), about 1.588 bits per trit.
class TernaryArray {
 public:
  static constexpr unsigned kBlockTrits = 17;
  static constexpr unsigned kBlockBits = 27;

  explicit TernaryArray(std::uint64_t n = 0);

  std::uint64_t size() const noexcept { return n_; }

  unsigned read(std::uint64_t i) const {
    check(i);
    std::uint64_t idx = i - 1;
    return static_cast<unsigned>((blocks_.get(idx / kBlockTrits) / kPow3[idx % kBlockTrits]) % 3);
  }

  void write(std::uint64_t i, unsigned t) {
    check(i);
    if (t > 2) throw std::invalid_argument("trit value must be 0, 1 or 2");
    std::uint64_t idx = i - 1;
    std::uint64_t b = idx / kBlockTrits;
    std::uint64_t w = blocks_.get(b);
    std::uint64_t p = kPow3[idx % kBlockTrits];
    unsigned old = static_cast<unsigned>((w / p) % 3);
    blocks_.set(b, w - old * p + t * p);
  }

  void fill(unsigned t);
  std::uint64_t bits() const noexcept { return blocks_.bits(); }

 private:
  static constexpr std::array<std::uint64_t, kBlockTrits> kPow3 = [] {
    std::array<std::uint64_t, kBlockTrits> p{};
    p[0] = 1;
    for (unsigned i = 1; i < kBlockTrits; ++i) p[i] = p[i - 1] * 3;
    return p;
  }();

  void check(std::uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("ternary array index out of range");
  }

  std::uint64_t n_;
  PackedArray blocks_;
};

}  // namespace sdfs
