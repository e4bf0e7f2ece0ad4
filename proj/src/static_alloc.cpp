#include "sdfs/static_alloc.hpp"

#include <bit>
#include <string>

#include "sdfs/packed.hpp"

namespace sdfs {

namespace {

/// Position of the r-th set bit (0-based) of w.
unsigned select_in_word(std::uint64_t w, unsigned r) noexcept {
  for (unsigned i = 0; i < r; ++i) w &= w - 1;
  return static_cast<unsigned>(std::countr_zero(w));
}

}  // namespace

StaticAllocArray::StaticAllocArray(std::span<const unsigned> widths) : n_(widths.size()) {
  for (unsigned w : widths) {
    if (w > 64) throw std::invalid_argument("entry width above 64 bits");
    payload_bits_ += w;
  }
  delim_bits_ = n_ + payload_bits_;
  delim_.assign(delim_bits_ / 64 + 2, 0);
  payload_.assign(payload_bits_ / 64 + 2, 0);
  std::uint64_t pos = 0;
  for (unsigned w : widths) {
    pos += w;
    delim_[pos / 64] |= std::uint64_t{1} << (pos % 64);
    ++pos;
  }
  std::uint64_t blocks = delim_bits_ / kBlockBits + 1;
  block_rank_.assign(blocks + 1, 0);
  std::uint64_t ones = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    block_rank_[b] = ones;
    for (unsigned k = 0; k < kBlockBits / 64; ++k) {
      std::uint64_t wi = b * (kBlockBits / 64) + k;
      if (wi < delim_.size()) ones += std::popcount(delim_[wi]);
    }
    while (sample_.size() * kSampleRate < ones) sample_.push_back(static_cast<std::uint32_t>(b));
  }
  block_rank_[blocks] = ones;
}

std::uint64_t StaticAllocArray::select1(std::uint64_t r) const {
  std::uint64_t b = sample_[r / kSampleRate];
  while (block_rank_[b + 1] <= r) ++b;
  std::uint64_t left = r - block_rank_[b];
  std::uint64_t wi = b * (kBlockBits / 64);
  for (;; ++wi) {
    unsigned c = std::popcount(delim_[wi]);
    if (left < c) return wi * 64 + select_in_word(delim_[wi], static_cast<unsigned>(left));
    left -= c;
  }
}

StaticAllocArray::Window StaticAllocArray::window(std::uint64_t j) const {
  if (j < 1 || j > n_)
    throw std::out_of_range("entry " + std::to_string(j) + " outside 1.." + std::to_string(n_));
  std::uint64_t end = select1(j - 1);
  std::uint64_t start = j == 1 ? 0 : select1(j - 2) + 1;
  return {start - (j - 1), static_cast<unsigned>(end - start)};
}

unsigned StaticAllocArray::width(std::uint64_t j) const { return window(j).width; }

std::uint64_t StaticAllocArray::read(std::uint64_t j) const {
  auto w = window(j);
  return get_field(payload_.data(), w.offset, w.width);
}

void StaticAllocArray::write(std::uint64_t j, std::uint64_t value) {
  auto w = window(j);
  if ((value & ~low_bits(w.width)) != 0)
    throw std::invalid_argument("value " + std::to_string(value) + " wider than the " +
                                std::to_string(w.width) + "-bit entry " + std::to_string(j));
  set_field(payload_.data(), w.offset, w.width, value);
}

std::uint64_t StaticAllocArray::bits() const noexcept {
  return delim_bits_ + payload_bits_ + block_rank_.size() * 64 + sample_.size() * 32;
}

}  // namespace sdfs
