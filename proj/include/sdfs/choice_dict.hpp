#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sdfs {

class EmptyChoice : public std::logic_error {
 public:
  EmptyChoice() : std::logic_error("choice() on an empty choice dictionary") {}
};

/// Subset of 1..n in one membership bit per element plus a 64-ary summary
/// tree (bit i of a summary word is set iff child word i is nonzero).
class ChoiceDict {
 public:
  explicit ChoiceDict(std::uint64_t universe = 0);

  std::uint64_t universe() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  void insert(std::uint64_t v);
  void erase(std::uint64_t v);
  bool contains(std::uint64_t v) const;
  /// Some member; throws EmptyChoice if the set is empty.
  std::uint64_t choice() const;
  /// Smallest member >= v, or 0 if there is none.
  std::uint64_t next(std::uint64_t v) const;

  /// Calls f(v) for every member in increasing order; f may not mutate
  /// the dictionary.
  template <class F>
  void for_each(F&& f) const {
    if (count_ == 0) return;
    visit(levels_.size() - 1, 0, f);
  }
  std::vector<std::uint64_t> members() const;

  std::uint64_t bits() const noexcept;

 private:
  template <class F>
  void visit(std::size_t level, std::size_t word, F& f) const {
    std::uint64_t w = levels_[level][word];
    while (w != 0) {
      unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
      w &= w - 1;
      std::size_t idx = word * 64 + b;
      if (level == 0) f(static_cast<std::uint64_t>(idx + 1));
      else visit(level - 1, idx, f);
    }
  }
  void check(std::uint64_t v) const {
    if (v < 1 || v > n_) throw std::out_of_range("choice dictionary index out of range");
  }

  std::uint64_t n_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<std::uint64_t>> levels_;  // levels_[0] is the membership array
};

}  // namespace sdfs
