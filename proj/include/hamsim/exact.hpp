#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

#include "hamsim/circuit.hpp"
#include "hamsim/distribution.hpp"
#include "hamsim/pauli.hpp"

namespace hamsim {

using DenseOperator = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline constexpr uint32_t kExactWidthCap = 12;
inline constexpr uint32_t kUnitaryWidthCap = 10;

DenseOperator pauli_matrix(Pauli p);

/// Dense matrix of a Pauli string under the qubit-0-leftmost index
/// convention (qubit 0 is the leftmost Kronecker factor).
DenseOperator pauli_string_matrix(const PauliString& s);

/// Hermitian matrix of the Pauli sum: the Kronecker-product weighted sum of
/// its terms.
DenseOperator hamiltonian_matrix(const PauliSum& h, uint32_t width_cap = kExactWidthCap);

/// Full 2^n x 2^n matrix of a single gate.
DenseOperator gate_matrix_full(const Gate& g, uint32_t width);

/// Product of gate matrices in time order. Intended as a test oracle at
/// small widths; quadratic in memory and cubic per gate.
DenseOperator circuit_unitary(const Circuit& c, uint32_t width_cap = kUnitaryWidthCap);

/// Circuit applied to a basis state via per-gate dense matrix-vector
/// products. Independent of the statevector kernels.
DenseVector apply_circuit_dense(const Circuit& c, uint64_t basis_index,
                                uint32_t width_cap = kUnitaryWidthCap);

/// exp(-i H t) by Hermitian eigendecomposition; unitary to solver precision.
DenseOperator evolution_operator(const PauliSum& h, double t, uint32_t width_cap = kExactWidthCap);

/// Analytic distribution of exp(-i H t) applied to a basis state.
Distribution exact_evolution_distribution(const PauliSum& h, double t,
                                          const std::string& initial_bits,
                                          uint32_t width_cap = kExactWidthCap);

}  // namespace hamsim
