#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hamsim/pauli.hpp"

namespace hamsim {

enum class BoundaryCondition { open, periodic };

/// Transverse-field Ising chain: h X_i per site plus Z_i Z_{i+1} per edge,
/// with a wrap edge when periodic.
PauliSum tfim(uint32_t n, double h, BoundaryCondition bc);

/// Heisenberg XXX chain: X_i X_j + Y_i Y_j + Z_i Z_j per edge (unit
/// antiferromagnetic coupling) plus a uniform h Z_i field.
PauliSum heisenberg(uint32_t n, double h, BoundaryCondition bc);

struct Max3SatLiteral {
  uint32_t var = 0;
  bool negated = false;
};

struct Max3SatClause {
  std::array<Max3SatLiteral, 3> literals;
};

struct Max3SatInstance {
  uint32_t n_vars = 0;
  std::vector<Max3SatClause> clauses;
  uint64_t seed = 0;
};

/// Random Max3SAT instance with m = round(r*n) clauses. Each clause draws 3
/// distinct variables uniformly and negates each literal on a fair coin;
/// clauses may repeat. The clause (x_i v x_j v x_k) contributes
/// I - (1/8)(I+Z_i)(I+Z_j)(I+Z_k), with (I-Z) replacing the factor of a
/// negated literal; the expansion is merged into one all-{I,Z} PauliSum.
std::pair<PauliSum, Max3SatInstance> max3sat(uint32_t n, double clause_ratio, uint64_t seed);

/// 1D Fermi-Hubbard chain under the Jordan-Wigner encoding, on 2*n_sites
/// qubits ordered site-major with interleaved spin: qubit 2i is (site i, up)
/// and qubit 2i+1 is (site i, down). Hopping -t(c^dag c + h.c.) maps to
/// -(t/2)(X Z..Z X + Y Z..Z Y); on-site U n_up n_down maps to the expansion
/// of (U/4)(I - Z_up)(I - Z_down), keeping the all-identity part.
PauliSum fermi_hubbard_1d_jw(uint32_t n_sites, double t_hop, double u, BoundaryCondition bc);

}  // namespace hamsim
