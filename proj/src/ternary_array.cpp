#include "sdfs/ternary_array.hpp"

namespace sdfs {

TernaryArray::TernaryArray(std::uint64_t n)
    : n_(n), blocks_((n + kBlockTrits - 1) / kBlockTrits, kBlockBits) {}

void TernaryArray::fill(unsigned t) {
  if (t > 2) throw std::invalid_argument("trit value must be 0, 1 or 2");
  std::uint64_t full = 0;
  for (unsigned i = 0; i < kBlockTrits; ++i) full += t * kPow3[i];
  for (std::uint64_t b = 0; b < blocks_.size(); ++b) blocks_.set(b, full);
}

}  // namespace sdfs
