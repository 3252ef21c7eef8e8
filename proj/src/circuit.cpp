#include "hamsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hamsim {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
  }
  throw std::logic_error("invalid gate kind");
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::S: g.kind = GateKind::Sdg; break;
    case GateKind::Sdg: g.kind = GateKind::S; break;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ: g.angle = -angle; break;
    default: break;  // self-inverse
  }
  return g;
}

void Circuit::append(const Gate& g) {
  if (g.q0 >= width || (g.kind == GateKind::CX && g.q1 >= width))
    throw std::invalid_argument("gate qubit index out of range for width " + std::to_string(width));
  if (g.kind == GateKind::CX && g.q0 == g.q1)
    throw std::invalid_argument("CX control and target must differ");
  if (g.is_rotation() && !std::isfinite(g.angle))
    throw std::invalid_argument("rotation angle must be finite");
  gates.push_back(g);
}

Circuit invert(const Circuit& c) {
  Circuit out(c.width, c.label.empty() ? std::string() : c.label + "^-1");
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) out.gates.push_back(it->inverse());
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.width != b.width)
    throw std::invalid_argument("concat: width mismatch (" + std::to_string(a.width) + " vs " +
                                std::to_string(b.width) + ")");
  Circuit out(a.width, a.label);
  out.gates.reserve(a.gates.size() + b.gates.size());
  out.gates.insert(out.gates.end(), a.gates.begin(), a.gates.end());
  out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
  return out;
}

DepthMetrics depth_metrics(const Circuit& c) {
  DepthMetrics m;
  m.gate_count = static_cast<uint32_t>(c.gates.size());
  std::vector<uint32_t> busy_until(c.width, 0);
  uint32_t depth = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CX) ++m.two_qubit_count;
    uint32_t layer = busy_until[g.q0];
    if (g.kind == GateKind::CX) layer = std::max(layer, busy_until[g.q1]);
    busy_until[g.q0] = layer + 1;
    if (g.kind == GateKind::CX) busy_until[g.q1] = layer + 1;
    depth = std::max(depth, layer + 1);
  }
  m.layered_depth = depth;
  return m;
}

std::string to_debug_text(const Circuit& c) {
  std::ostringstream out;
  char buf[48];
  for (const Gate& g : c.gates) {
    out << gate_kind_name(g.kind) << " " << g.q0;
    if (g.kind == GateKind::CX) out << " " << g.q1;
    if (g.is_rotation()) {
      std::snprintf(buf, sizeof(buf), " %.17g", g.angle);
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hamsim
