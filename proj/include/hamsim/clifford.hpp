#pragma once

#include "hamsim/circuit.hpp"
#include "hamsim/pauli.hpp"

namespace hamsim {

struct CliffordImage {
  PauliString string;
  int sign = +1;  // -1 or +1; +/-i never arises for this gate set
};

/// Conjugation g . P . g^-1 = sign . P' for a Clifford gate g in
/// {H, X, Y, Z, S, Sdg, CX}. Throws for rotation gates.
CliffordImage conjugate_by_clifford(const PauliString& p, const Gate& gate);

}  // namespace hamsim
