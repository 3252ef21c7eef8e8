#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "hamsim/circuit.hpp"
#include "hamsim/distribution.hpp"
#include "hamsim/pauli.hpp"

namespace hamsim {

struct MirrorVariant {
  enum class Kind { simple, random_pauli, multi_random_pauli };
  Kind kind = Kind::simple;
  int n_samples = 10;  // multi_random_pauli only
};

/// The Pauli operator (with sign) tracked while commuting a Pauli layer
/// through the inverse half of a mirror circuit.
struct PauliFrame {
  PauliString current;
  int sign = +1;
};

/// c followed by invert(c); noiseless execution maps every input state to
/// itself.
Circuit simple_mirror(const Circuit& c);

/// c, a layer of Pauli gates p (non-identity factors only), then a
/// quasi-inverse: invert(c) with each rotation's angle sign-flipped whenever
/// the running frame anticommutes with the rotation axis on that qubit.
/// The whole circuit acts as sign * resultant on every input state.
std::pair<Circuit, PauliFrame> quasi_inverse_mirror(const Circuit& c, const PauliString& p);

/// Point mass on initial_bits with bit i flipped wherever the resultant has
/// an X or Y factor; Z factors and the sign only touch phases.
Distribution expected_mirror_distribution(const std::string& initial_bits,
                                          const PauliFrame& resultant);

/// Uniform i.i.d. factors over {I, X, Y, Z}; deterministic under seed.
PauliString random_pauli_layer(uint32_t width, uint64_t seed);

}  // namespace hamsim
