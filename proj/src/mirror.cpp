#include "hamsim/mirror.hpp"

#include <stdexcept>

#include "hamsim/clifford.hpp"
#include "hamsim/rng.hpp"

namespace hamsim {

Circuit simple_mirror(const Circuit& c) {
  Circuit out = concat(c, invert(c));
  out.label = c.label.empty() ? "mirror" : "mirror(" + c.label + ")";
  return out;
}

namespace {

Pauli rotation_axis(GateKind k) {
  switch (k) {
    case GateKind::RX: return Pauli::X;
    case GateKind::RY: return Pauli::Y;
    case GateKind::RZ: return Pauli::Z;
    default: throw std::logic_error("not a rotation gate");
  }
}

}  // namespace

std::pair<Circuit, PauliFrame> quasi_inverse_mirror(const Circuit& c, const PauliString& p) {
  if (p.width() != c.width)
    throw std::invalid_argument("quasi_inverse_mirror: Pauli layer width mismatch");

  Circuit out(c.width, c.label.empty() ? "quasi_mirror" : "quasi_mirror(" + c.label + ")");
  out.gates = c.gates;
  for (uint32_t q = 0; q < p.width(); ++q) {
    switch (p.factor(q)) {
      case Pauli::X: out.append(Gate::x(q)); break;
      case Pauli::Y: out.append(Gate::y(q)); break;
      case Pauli::Z: out.append(Gate::z(q)); break;
      case Pauli::I: break;
    }
  }

  PauliFrame frame{p, +1};
  for (const Gate& g : invert(c).gates) {
    if (g.is_clifford()) {
      CliffordImage image = conjugate_by_clifford(frame.current, g);
      frame.current = std::move(image.string);
      frame.sign *= image.sign;
      out.append(g);
    } else {
      // P R_A(phi) = R_A(+/-phi) P: the frame passes through unchanged and
      // the emitted angle flips iff the frame anticommutes with the axis.
      Pauli axis = rotation_axis(g.kind);
      Pauli f = frame.current.factor(g.q0);
      Gate emitted = g;
      if (f != Pauli::I && f != axis) emitted.angle = -g.angle;
      out.append(emitted);
    }
  }
  return {std::move(out), std::move(frame)};
}

Distribution expected_mirror_distribution(const std::string& initial_bits,
                                          const PauliFrame& resultant) {
  if (initial_bits.size() != resultant.current.width())
    throw std::invalid_argument("expected_mirror_distribution: width mismatch");
  std::string bits = initial_bits;
  for (uint32_t q = 0; q < resultant.current.width(); ++q) {
    Pauli f = resultant.current.factor(q);
    if (f == Pauli::X || f == Pauli::Y) bits[q] = bits[q] == '0' ? '1' : '0';
  }
  return Distribution::point_mass(bits);
}

PauliString random_pauli_layer(uint32_t width, uint64_t seed) {
  if (width < 1) throw std::invalid_argument("random_pauli_layer: width must be >= 1");
  Rng rng(seed);
  PauliString p = PauliString::identity(width);
  for (uint32_t q = 0; q < width; ++q) p.set_factor(q, static_cast<Pauli>(rng.bounded(4)));
  return p;
}

}  // namespace hamsim
