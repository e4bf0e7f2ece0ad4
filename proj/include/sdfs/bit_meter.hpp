#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sdfs {

/// Audits working memory in bits. Each named category carries a current
/// and a peak value; the meter also tracks the peak of the category sum.
class BitMeter {
 public:
  using Handle = std::size_t;

  Handle category(std::string_view name);
  void set(Handle h, std::uint64_t bits);
  void add(Handle h, std::int64_t delta) {
    set(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(entries_[h].current) + delta));
  }

  std::uint64_t current(Handle h) const { return entries_[h].current; }
  std::uint64_t peak(Handle h) const { return entries_[h].peak; }
  std::uint64_t current(std::string_view name) const;
  std::uint64_t peak(std::string_view name) const;
  bool has(std::string_view name) const;

  std::uint64_t total_current() const noexcept { return total_; }
  std::uint64_t total_peak() const noexcept { return total_peak_; }

  std::vector<std::string> names() const;

  /// {"category": {"current_bits": n, "peak_bits": n}, ..., "total": {...}}
  std::string to_json() const;

 private:
  struct Entry {
    std::string name;
    std::uint64_t current = 0;
    std::uint64_t peak = 0;
  };
  std::vector<Entry> entries_;
  std::uint64_t total_ = 0;
  std::uint64_t total_peak_ = 0;
};

}  // namespace sdfs
