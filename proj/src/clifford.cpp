#include "hamsim/clifford.hpp"

#include <array>
#include <stdexcept>

namespace hamsim {

namespace {

struct Image1 {
  Pauli p;
  int sign;
};

// Single-qubit conjugation tables indexed by the input Pauli {I,X,Y,Z}.
constexpr std::array<Image1, 4> kTableH = {{{Pauli::I, +1}, {Pauli::Z, +1}, {Pauli::Y, -1}, {Pauli::X, +1}}};
constexpr std::array<Image1, 4> kTableX = {{{Pauli::I, +1}, {Pauli::X, +1}, {Pauli::Y, -1}, {Pauli::Z, -1}}};
constexpr std::array<Image1, 4> kTableY = {{{Pauli::I, +1}, {Pauli::X, -1}, {Pauli::Y, +1}, {Pauli::Z, -1}}};
constexpr std::array<Image1, 4> kTableZ = {{{Pauli::I, +1}, {Pauli::X, -1}, {Pauli::Y, -1}, {Pauli::Z, +1}}};
constexpr std::array<Image1, 4> kTableS = {{{Pauli::I, +1}, {Pauli::Y, +1}, {Pauli::X, -1}, {Pauli::Z, +1}}};
constexpr std::array<Image1, 4> kTableSdg = {{{Pauli::I, +1}, {Pauli::Y, -1}, {Pauli::X, +1}, {Pauli::Z, +1}}};

struct Image2 {
  Pauli pc, pt;
  int sign;
};

// CX conjugation on (control, target) pairs, indexed by 4*control + target.
constexpr std::array<Image2, 16> kTableCX = {{
    {Pauli::I, Pauli::I, +1},  // II
    {Pauli::I, Pauli::X, +1},  // IX
    {Pauli::Z, Pauli::Y, +1},  // IY
    {Pauli::Z, Pauli::Z, +1},  // IZ
    {Pauli::X, Pauli::X, +1},  // XI
    {Pauli::X, Pauli::I, +1},  // XX
    {Pauli::Y, Pauli::Z, +1},  // XY
    {Pauli::Y, Pauli::Y, -1},  // XZ
    {Pauli::Y, Pauli::X, +1},  // YI
    {Pauli::Y, Pauli::I, +1},  // YX
    {Pauli::X, Pauli::Z, -1},  // YY
    {Pauli::X, Pauli::Y, +1},  // YZ
    {Pauli::Z, Pauli::I, +1},  // ZI
    {Pauli::Z, Pauli::X, +1},  // ZX
    {Pauli::I, Pauli::Y, +1},  // ZY
    {Pauli::I, Pauli::Z, +1},  // ZZ
}};

const std::array<Image1, 4>& table_for(GateKind k) {
  switch (k) {
    case GateKind::H: return kTableH;
    case GateKind::X: return kTableX;
    case GateKind::Y: return kTableY;
    case GateKind::Z: return kTableZ;
    case GateKind::S: return kTableS;
    case GateKind::Sdg: return kTableSdg;
    default: throw std::logic_error("not a single-qubit Clifford");
  }
}

}  // namespace

CliffordImage conjugate_by_clifford(const PauliString& p, const Gate& gate) {
  if (!gate.is_clifford())
    throw std::invalid_argument("conjugate_by_clifford: gate is not Clifford");
  if (gate.q0 >= p.width() || (gate.kind == GateKind::CX && gate.q1 >= p.width()))
    throw std::invalid_argument("conjugate_by_clifford: gate qubit out of range");

  CliffordImage out{p, +1};
  if (gate.kind == GateKind::CX) {
    int idx = 4 * static_cast<int>(p.factor(gate.q0)) + static_cast<int>(p.factor(gate.q1));
    const Image2& img = kTableCX[static_cast<size_t>(idx)];
    out.string.set_factor(gate.q0, img.pc);
    out.string.set_factor(gate.q1, img.pt);
    out.sign = img.sign;
  } else {
    const Image1& img = table_for(gate.kind)[static_cast<size_t>(p.factor(gate.q0))];
    out.string.set_factor(gate.q0, img.p);
    out.sign = img.sign;
  }
  return out;
}

}  // namespace hamsim
