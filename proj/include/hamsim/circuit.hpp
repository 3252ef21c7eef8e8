#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hamsim {

enum class GateKind : uint8_t { H, X, Y, Z, S, Sdg, RX, RY, RZ, CX };

const char* gate_kind_name(GateKind k);

struct Gate {
  GateKind kind = GateKind::H;
  uint32_t q0 = 0;
  uint32_t q1 = 0;      // target of CX; unused otherwise
  double angle = 0.0;   // rotations only

  static Gate h(uint32_t q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate x(uint32_t q) { return {GateKind::X, q, 0, 0.0}; }
  static Gate y(uint32_t q) { return {GateKind::Y, q, 0, 0.0}; }
  static Gate z(uint32_t q) { return {GateKind::Z, q, 0, 0.0}; }
  static Gate s(uint32_t q) { return {GateKind::S, q, 0, 0.0}; }
  static Gate sdg(uint32_t q) { return {GateKind::Sdg, q, 0, 0.0}; }
  static Gate rx(uint32_t q, double angle) { return {GateKind::RX, q, 0, angle}; }
  static Gate ry(uint32_t q, double angle) { return {GateKind::RY, q, 0, angle}; }
  static Gate rz(uint32_t q, double angle) { return {GateKind::RZ, q, 0, angle}; }
  static Gate cx(uint32_t control, uint32_t target) { return {GateKind::CX, control, target, 0.0}; }

  int arity() const { return kind == GateKind::CX ? 2 : 1; }
  bool is_rotation() const {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
  }
  bool is_clifford() const { return !is_rotation(); }

  /// H/X/Y/Z/CX are self-inverse; S <-> Sdg; rotations negate the angle.
  Gate inverse() const;

  bool operator==(const Gate& o) const {
    return kind == o.kind && q0 == o.q0 && q1 == o.q1 && angle == o.angle;
  }
};

/// An ordered gate list over a fixed width. Immutable by convention after
/// construction; all mutation goes through append(), which validates indices.
struct Circuit {
  uint32_t width = 0;
  std::vector<Gate> gates;
  std::string label;

  Circuit() = default;
  explicit Circuit(uint32_t w, std::string lbl = {}) : width(w), label(std::move(lbl)) {}

  void append(const Gate& g);
  size_t size() const { return gates.size(); }
};

struct DepthMetrics {
  uint32_t layered_depth = 0;
  uint32_t gate_count = 0;
  uint32_t two_qubit_count = 0;
};

Circuit invert(const Circuit& c);
Circuit concat(const Circuit& a, const Circuit& b);

/// Greedy left-aligned layering: a gate enters the earliest layer where all
/// of its qubits are free.
DepthMetrics depth_metrics(const Circuit& c);

/// One gate per line: `<kind> <qubits> [angle]`. Logs and golden tests only.
std::string to_debug_text(const Circuit& c);

}  // namespace hamsim
