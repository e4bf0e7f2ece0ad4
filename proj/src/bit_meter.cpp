#include "sdfs/bit_meter.hpp"

#include <stdexcept>

#include "json.hpp"

namespace sdfs {

BitMeter::Handle BitMeter::category(std::string_view name) {
  for (Handle h = 0; h < entries_.size(); ++h)
    if (entries_[h].name == name) return h;
  if (name == "total") throw std::invalid_argument("'total' is reserved");
  entries_.push_back(Entry{std::string(name)});
  return entries_.size() - 1;
}

void BitMeter::set(Handle h, std::uint64_t bits) {
  auto& e = entries_[h];
  total_ = total_ - e.current + bits;
  e.current = bits;
  if (bits > e.peak) e.peak = bits;
  if (total_ > total_peak_) total_peak_ = total_;
}

bool BitMeter::has(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return true;
  return false;
}

std::uint64_t BitMeter::current(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e.current;
  throw std::out_of_range("no meter category " + std::string(name));
}

std::uint64_t BitMeter::peak(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e.peak;
  throw std::out_of_range("no meter category " + std::string(name));
}

std::vector<std::string> BitMeter::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

std::string BitMeter::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& e : entries_) j[e.name] = {{"current_bits", e.current}, {"peak_bits", e.peak}};
  j["total"] = {{"current_bits", total_}, {"peak_bits", total_peak_}};
  return j.dump();
}

}  // namespace sdfs
