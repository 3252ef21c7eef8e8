#include "hamsim/distribution.hpp"

#include <stdexcept>

namespace hamsim {

std::string index_to_bits(uint64_t index, uint32_t width) {
  std::string bits(width, '0');
  for (uint32_t q = 0; q < width; ++q)
    if (index & (1ULL << (width - 1 - q))) bits[q] = '1';
  return bits;
}

uint64_t bits_to_index(const std::string& bits) {
  uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring must contain only 0/1");
    index = (index << 1) | static_cast<uint64_t>(c == '1');
  }
  return index;
}

Distribution Distribution::point_mass(const std::string& bits) {
  Distribution d;
  d.width = static_cast<uint32_t>(bits.size());
  d.entries[bits_to_index(bits)] = 1.0;
  return d;
}

double Distribution::total() const {
  double t = 0.0;
  for (const auto& [index, value] : entries) t += value;
  return t;
}

double Distribution::probability(uint64_t index) const {
  auto it = entries.find(index);
  if (it == entries.end()) return 0.0;
  return shots == 0 ? it->second : it->second / static_cast<double>(shots);
}

std::unordered_map<uint64_t, double> Distribution::normalized() const {
  std::unordered_map<uint64_t, double> out;
  double t = total();
  if (t <= 0.0) throw std::invalid_argument("cannot normalize an empty distribution");
  out.reserve(entries.size());
  for (const auto& [index, value] : entries) out.emplace(index, value / t);
  return out;
}

}  // namespace hamsim
