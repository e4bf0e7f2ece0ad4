#include "sdfs/choice_dict.hpp"

namespace sdfs {

ChoiceDict::ChoiceDict(std::uint64_t universe) : n_(universe) {
  std::uint64_t words = (n_ + 63) / 64;
  if (words == 0) words = 1;
  levels_.emplace_back(words, 0);
  while (words > 1) {
    words = (words + 63) / 64;
    levels_.emplace_back(words, 0);
  }
}

void ChoiceDict::insert(std::uint64_t v) {
  check(v);
  std::uint64_t idx = v - 1;
  for (auto& level : levels_) {
    std::uint64_t& w = level[idx / 64];
    std::uint64_t bit = std::uint64_t{1} << (idx % 64);
    if (w & bit) return;
    bool was_zero = w == 0;
    w |= bit;
    if (&level == &levels_.front()) ++count_;
    if (!was_zero) return;
    idx /= 64;
  }
}

void ChoiceDict::erase(std::uint64_t v) {
  check(v);
  std::uint64_t idx = v - 1;
  for (auto& level : levels_) {
    std::uint64_t& w = level[idx / 64];
    std::uint64_t bit = std::uint64_t{1} << (idx % 64);
    if (!(w & bit)) return;
    w &= ~bit;
    if (&level == &levels_.front()) --count_;
    if (w != 0) return;
    idx /= 64;
  }
}

bool ChoiceDict::contains(std::uint64_t v) const {
  check(v);
  return (levels_[0][(v - 1) / 64] >> ((v - 1) % 64)) & 1;
}

std::uint64_t ChoiceDict::choice() const {
  if (count_ == 0) throw EmptyChoice();
  std::uint64_t idx = 0;
  for (std::size_t l = levels_.size(); l-- > 0;)
    idx = idx * 64 + static_cast<std::uint64_t>(__builtin_ctzll(levels_[l][idx]));
  return idx + 1;
}

std::uint64_t ChoiceDict::next(std::uint64_t v) const {
  if (v < 1) v = 1;
  if (v > n_ || count_ == 0) return 0;
  std::uint64_t idx = v - 1;
  // climb until a word holds a set bit at or after idx
  std::size_t l = 0;
  for (;; ++l) {
    if (l == levels_.size()) return 0;
    std::uint64_t wi = idx / 64;
    if (wi < levels_[l].size()) {
      std::uint64_t w = levels_[l][wi] & (~std::uint64_t{0} << (idx % 64));
      if (w != 0) {
        idx = wi * 64 + static_cast<std::uint64_t>(__builtin_ctzll(w));
        break;
      }
    }
    idx = wi + 1;
  }
  while (l-- > 0) idx = idx * 64 + static_cast<std::uint64_t>(__builtin_ctzll(levels_[l][idx]));
  return idx + 1;
}

std::vector<std::uint64_t> ChoiceDict::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for_each([&](std::uint64_t v) { out.push_back(v); });
  return out;
}

std::uint64_t ChoiceDict::bits() const noexcept {
  std::uint64_t b = 64;  // population counter
  for (const auto& level : levels_) b += level.size() * 64;
  return b;
}

}  // namespace sdfs
