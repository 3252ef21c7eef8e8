#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hamsim/circuit.hpp"
#include "hamsim/distribution.hpp"
#include "hamsim/pauli.hpp"

namespace hamsim {

/// Default width cap: 2^26 complex doubles is about 1 GiB of state.
inline constexpr uint32_t kDefaultWidthCap = 26;

/// Dense 2^n amplitude vector. Basis index bit (n-1-q) holds qubit q, so the
/// bitstring of an index reads left to right from qubit 0.
class Statevector {
 public:
  Statevector(uint32_t width, uint64_t basis_index = 0);

  uint32_t width() const { return width_; }
  uint64_t dim() const { return uint64_t{1} << width_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  void apply(const Gate& g);
  void apply_pauli(uint32_t q, Pauli p);
  double norm_sq() const;
  double probability(uint64_t index) const { return std::norm(amps_[index]); }

 private:
  void apply_matrix1(uint32_t q, const std::complex<double> m[4]);
  void apply_cx(uint32_t control, uint32_t target);

  uint32_t width_;
  std::vector<std::complex<double>> amps_;
};

/// Per-gate stochastic Pauli (depolarizing) noise plus independent readout
/// bit flips. All probabilities in [0, 1]. The defaults give mid-range
/// mirror fidelities at 2-10 qubits while keeping the sqrt-rescaled mirror
/// results within a few percent of direct noisy-vs-ideal fidelities.
struct NoiseModel {
  double p1 = 1e-4;    // per 1-qubit gate
  double p2 = 5e-4;    // per CX
  double p_ro = 2e-3;  // per measured bit

  bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && p_ro == 0.0; }
  void validate() const;
};

struct Timing {
  uint64_t elapsed_ns = 0;  // whole call
  uint64_t kernel_ns = 0;   // gate application + sampling only
};

struct RunIdealResult {
  Statevector state;
  Timing timing;
};

/// Noiseless dense evolution of the circuit from a basis state.
RunIdealResult run_ideal(const Circuit& c, const std::string& initial_bits,
                         uint32_t width_cap = kDefaultWidthCap);

/// Analytic |amplitude|^2 distribution (the infinite-shot limit).
Distribution measure_analytic(const Statevector& s);

/// Draw `shots` bitstrings from |amplitude|^2 with per-bit readout flips.
Distribution sample(const Statevector& s, uint64_t shots, uint64_t seed, double p_ro);
Distribution sample(const Statevector& s, uint64_t shots, uint64_t seed, double p_ro,
                    Timing& timing);

struct RunNoisyResult {
  Distribution distribution;
  Timing timing;
};

/// Monte-Carlo Pauli trajectories: every shot replays the circuit; after
/// each 1-qubit gate a uniformly random non-identity Pauli is injected with
/// probability p1, after each CX a random non-identity two-qubit Pauli (15
/// choices) with probability p2, and measured bits flip with probability
/// p_ro. Shot k draws from its own stream derive_seed(seed, k), so results
/// are reproducible independent of scheduling.
RunNoisyResult run_noisy(const Circuit& c, const std::string& initial_bits,
                         const NoiseModel& noise, uint64_t shots, uint64_t seed,
                         uint32_t width_cap = kDefaultWidthCap);

}  // namespace hamsim
