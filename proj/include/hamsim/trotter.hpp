#pragma once

#include <cstdint>
#include <string>

#include "hamsim/circuit.hpp"
#include "hamsim/pauli.hpp"

namespace hamsim {

/// Terms are exponentiated in the order they appear in the sum; no
/// reordering scheme is implemented, so parameter-order studies go through
/// permuted inputs.
enum class TermOrder { as_given };

struct TrotterConfig {
  double time = 1.0;
  int steps = 5;
  TermOrder term_order = TermOrder::as_given;
};

/// X gates on the even qubits, taking |00..0> to the checkerboard state
/// |1010..>.
Circuit neel_prep(uint32_t n);

/// The checkerboard bitstring "1010..." of length n.
std::string neel_bits(uint32_t n);

/// Append gates realizing exp(-i * coeff * angle_scale * P): basis-change
/// every non-identity factor into Z, a CX ladder onto the last active qubit,
/// RZ(2 * coeff * angle_scale) there, then uncompute. Throws for the
/// all-identity string.
void append_pauli_exponential(Circuit& c, const PauliTerm& term, double angle_scale);

/// The fragment above as a standalone circuit of the given width.
Circuit pauli_exponential(const PauliTerm& term, double angle_scale, uint32_t width);

/// Order-1 product formula: K repetitions of the per-term exponentials with
/// angle scale t/K, terms in the order they appear in the sum. All-identity
/// terms are skipped (global phase only). State preparation is not included.
Circuit trotter_circuit(const PauliSum& h, const TrotterConfig& cfg);

}  // namespace hamsim
