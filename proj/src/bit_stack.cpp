#include "sdfs/bit_stack.hpp"

#include <string>

namespace sdfs {

namespace {

constexpr std::uint64_t low_mask(unsigned width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

void BitStack::push_bits(std::uint64_t value, unsigned width) {
  if (width == 0) return;
  if (width > 64 || (value & ~low_mask(width)) != 0)
    throw std::invalid_argument("value " + std::to_string(value) + " does not fit in " +
                                std::to_string(width) + " bits");
  std::uint64_t end = bits_ + width;
  if (words_.size() * 64 < end) words_.resize((end + 63) / 64 + 1, 0);
  unsigned off = bits_ % 64;
  std::size_t w = bits_ / 64;
  words_[w] = (words_[w] & low_mask(off)) | (value << off);
  if (off + width > 64) words_[w + 1] = value >> (64 - off);
  bits_ = end;
  if (bits_ > peak_) peak_ = bits_;
}

std::uint64_t BitStack::peek_bits(unsigned width) const {
  if (width == 0) return 0;
  if (width > bits_) throw StackUnderflow();
  std::uint64_t start = bits_ - width;
  unsigned off = start % 64;
  std::size_t w = start / 64;
  std::uint64_t v = words_[w] >> off;
  if (off + width > 64) v |= words_[w + 1] << (64 - off);
  return v & low_mask(width);
}

bool BitStack::same_content(const BitStack& o) const noexcept {
  if (bits_ != o.bits_) return false;
  std::uint64_t full = bits_ / 64;
  for (std::uint64_t i = 0; i < full; ++i)
    if (words_[i] != o.words_[i]) return false;
  unsigned rest = bits_ % 64;
  return rest == 0 || ((words_[full] ^ o.words_[full]) & low_mask(rest)) == 0;
}

std::uint64_t BitStack::pop_bits(unsigned width) {
  std::uint64_t v = peek_bits(width);
  bits_ -= width;
  return v;
}

void BitStack::push(std::uint64_t turn, Slot d) {
  if (d < 3) throw std::invalid_argument("turn entries need degree >= 3");
  push_bits(turn, entry_width(d));
}

std::uint64_t BitStack::pop(Slot d) {
  if (d < 3) throw std::invalid_argument("turn entries need degree >= 3");
  if (empty()) throw StackUnderflow();
  return pop_bits(entry_width(d));
}

std::uint64_t GroupedStack::staging_bits() const noexcept {
  std::uint64_t bits = 0;
  for (std::size_t c = 0; c < kClasses.size(); ++c)
    bits += staging_[c].count * BitStack::entry_width(kClasses[c].degree);
  return bits;
}

bool GroupedStack::empty() const noexcept {
  if (!stack_.empty()) return false;
  for (const auto& s : staging_)
    if (s.count != 0) return false;
  return true;
}

void GroupedStack::clear() noexcept {
  stack_.clear();
  for (auto& s : staging_) s.count = 0;
}

void GroupedStack::push(std::uint64_t turn, Slot d) {
  int c = class_of(d);
  if (c < 0) {
    stack_.push(turn, d);
    note_size();
    return;
  }
  const auto& cls = kClasses[c];
  if (turn >= cls.degree - 1)
    throw std::invalid_argument("turn value out of range for degree " + std::to_string(d));
  auto& st = staging_[c];
  st.digits[st.count++] = static_cast<std::uint8_t>(turn);
  if (st.count == cls.group_size) {
    // first digit is least significant
    std::uint64_t packed = 0;
    for (unsigned i = cls.group_size; i-- > 0;) packed = packed * (cls.degree - 1) + st.digits[i];
    st.count = 0;
    stack_.push_bits(packed, cls.packed_width);
  }
  note_size();
}

std::uint64_t GroupedStack::pop(Slot d) {
  int c = class_of(d);
  if (c < 0) return stack_.pop(d);
  const auto& cls = kClasses[c];
  auto& st = staging_[c];
  if (st.count == 0) {
    if (stack_.size_bits() < cls.packed_width) throw StackUnderflow();
    std::uint64_t packed = stack_.pop_bits(cls.packed_width);
    for (unsigned i = 0; i < cls.group_size; ++i) {
      st.digits[i] = static_cast<std::uint8_t>(packed % (cls.degree - 1));
      packed /= cls.degree - 1;
    }
    st.count = cls.group_size;
  }
  return st.digits[--st.count];
}

}  // namespace sdfs
