#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

namespace hamsim {

// Bitstring convention used everywhere: qubit 0 is the leftmost character,
// so "10" is qubit 0 in |1> and maps to basis index 0b10 = 2.
std::string index_to_bits(uint64_t index, uint32_t width);
uint64_t bits_to_index(const std::string& bits);

/// A distribution over measurement bitstrings, keyed by basis index. With
/// shots == 0 the entries are analytic probabilities; otherwise they are
/// counts summing to `shots`.
struct Distribution {
  uint32_t width = 0;
  uint64_t shots = 0;
  std::unordered_map<uint64_t, double> entries;

  static Distribution point_mass(const std::string& bits);

  bool analytic() const { return shots == 0; }
  double total() const;
  /// Probability of a bitstring (counts are converted to frequencies).
  double probability(uint64_t index) const;
  /// Entries normalized to frequencies.
  std::unordered_map<uint64_t, double> normalized() const;
};

}  // namespace hamsim
