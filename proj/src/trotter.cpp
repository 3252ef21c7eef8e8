#include "hamsim/trotter.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hamsim {

Circuit neel_prep(uint32_t n) {
  if (n < 1) throw std::invalid_argument("neel_prep: width must be >= 1");
  Circuit c(n, "neel_prep");
  for (uint32_t q = 0; q < n; q += 2) c.append(Gate::x(q));
  return c;
}

std::string neel_bits(uint32_t n) {
  std::string bits(n, '0');
  for (uint32_t q = 0; q < n; q += 2) bits[q] = '1';
  return bits;
}

void append_pauli_exponential(Circuit& c, const PauliTerm& term, double angle_scale) {
  if (term.string.width() != c.width)
    throw std::invalid_argument("append_pauli_exponential: width mismatch");
  std::vector<uint32_t> active;
  for (uint32_t q = 0; q < c.width; ++q)
    if (term.string.factor(q) != Pauli::I) active.push_back(q);
  if (active.empty())
    throw std::invalid_argument("append_pauli_exponential: all-identity term has no circuit");

  for (uint32_t q : active) {
    switch (term.string.factor(q)) {
      case Pauli::X: c.append(Gate::h(q)); break;
      case Pauli::Y:
        c.append(Gate::sdg(q));
        c.append(Gate::h(q));
        break;
      default: break;
    }
  }
  for (size_t i = 0; i + 1 < active.size(); ++i) c.append(Gate::cx(active[i], active[i + 1]));
  c.append(Gate::rz(active.back(), 2.0 * term.coeff * angle_scale));
  for (size_t i = active.size() - 1; i-- > 0;) c.append(Gate::cx(active[i], active[i + 1]));
  for (auto it = active.rbegin(); it != active.rend(); ++it) {
    switch (term.string.factor(*it)) {
      case Pauli::X: c.append(Gate::h(*it)); break;
      case Pauli::Y:
        c.append(Gate::h(*it));
        c.append(Gate::s(*it));
        break;
      default: break;
    }
  }
}

Circuit pauli_exponential(const PauliTerm& term, double angle_scale, uint32_t width) {
  Circuit c(width, "pauli_exp");
  append_pauli_exponential(c, term, angle_scale);
  return c;
}

Circuit trotter_circuit(const PauliSum& h, const TrotterConfig& cfg) {
  if (cfg.steps < 1) throw std::invalid_argument("trotter_circuit: steps must be >= 1");
  if (!std::isfinite(cfg.time)) throw std::invalid_argument("trotter_circuit: time must be finite");
  std::vector<PauliTerm> terms = h.non_identity_terms();
  if (terms.empty())
    throw std::invalid_argument("trotter_circuit: Hamiltonian has no non-identity terms");

  Circuit c(h.width(), "trotter");
  const double scale = cfg.time / cfg.steps;
  for (int step = 0; step < cfg.steps; ++step)
    for (const PauliTerm& term : terms) append_pauli_exponential(c, term, scale);
  return c;
}

}  // namespace hamsim
