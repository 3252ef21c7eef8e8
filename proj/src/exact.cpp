#include "hamsim/exact.hpp"

#include <stdexcept>

namespace hamsim {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

void check_width(uint32_t width, uint32_t cap, const char* who) {
  if (width > cap)
    throw std::invalid_argument(std::string(who) + ": width " + std::to_string(width) +
                                " exceeds cap " + std::to_string(cap));
}

}  // namespace

DenseOperator pauli_matrix(Pauli p) {
  DenseOperator m(2, 2);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

DenseOperator pauli_string_matrix(const PauliString& s) {
  check_width(s.width(), kExactWidthCap, "pauli_string_matrix");
  const uint64_t dim = uint64_t{1} << s.width();
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  // Each Pauli string has one nonzero per column: |x> maps to
  // phase(x) |x ^ flip_mask> with X flipping, Y flipping with i(-1)^bit, and
  // Z contributing (-1)^bit.
  uint64_t flip_mask = 0;
  for (uint32_t q = 0; q < s.width(); ++q) {
    Pauli p = s.factor(q);
    if (p == Pauli::X || p == Pauli::Y) flip_mask |= uint64_t{1} << (s.width() - 1 - q);
  }
  for (uint64_t x = 0; x < dim; ++x) {
    std::complex<double> phase = 1.0;
    for (uint32_t q = 0; q < s.width(); ++q) {
      const bool bit = (x >> (s.width() - 1 - q)) & 1;
      switch (s.factor(q)) {
        case Pauli::Y: phase *= bit ? -kI : kI; break;
        case Pauli::Z:
          if (bit) phase = -phase;
          break;
        default: break;
      }
    }
    m(static_cast<Eigen::Index>(x ^ flip_mask), static_cast<Eigen::Index>(x)) = phase;
  }
  return m;
}

DenseOperator hamiltonian_matrix(const PauliSum& h, uint32_t width_cap) {
  check_width(h.width(), width_cap, "hamiltonian_matrix");
  const uint64_t dim = uint64_t{1} << h.width();
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (const PauliTerm& term : h.terms()) m += term.coeff * pauli_string_matrix(term.string);
  return m;
}

DenseOperator gate_matrix_full(const Gate& g, uint32_t width) {
  check_width(width, kExactWidthCap, "gate_matrix_full");
  const uint64_t dim = uint64_t{1} << width;
  DenseOperator full = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                           static_cast<Eigen::Index>(dim));
  if (g.kind == GateKind::CX) {
    const uint64_t cbit = uint64_t{1} << (width - 1 - g.q0);
    const uint64_t tbit = uint64_t{1} << (width - 1 - g.q1);
    for (uint64_t x = 0; x < dim; ++x) {
      uint64_t y = (x & cbit) ? (x ^ tbit) : x;
      full(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1.0;
    }
    return full;
  }

  DenseOperator m2(2, 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H: m2 << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2; break;
    case GateKind::X: m2 << 0, 1, 1, 0; break;
    case GateKind::Y: m2 << 0, -kI, kI, 0; break;
    case GateKind::Z: m2 << 1, 0, 0, -1; break;
    case GateKind::S: m2 << 1, 0, 0, kI; break;
    case GateKind::Sdg: m2 << 1, 0, 0, -kI; break;
    case GateKind::RX: {
      double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
      m2 << c, -kI * s, -kI * s, c;
      break;
    }
    case GateKind::RY: {
      double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
      m2 << c, -s, s, c;
      break;
    }
    case GateKind::RZ:
      m2 << std::exp(-kI * (g.angle / 2.0)), 0, 0, std::exp(kI * (g.angle / 2.0));
      break;
    case GateKind::CX: break;  // handled above
  }

  const uint64_t qbit = uint64_t{1} << (width - 1 - g.q0);
  for (uint64_t x = 0; x < dim; ++x) {
    const int b = (x & qbit) ? 1 : 0;
    for (int bp = 0; bp < 2; ++bp) {
      uint64_t y = bp ? (x | qbit) : (x & ~qbit);
      full(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += m2(bp, b);
    }
  }
  return full;
}

DenseOperator circuit_unitary(const Circuit& c, uint32_t width_cap) {
  check_width(c.width, width_cap, "circuit_unitary");
  const uint64_t dim = uint64_t{1} << c.width;
  DenseOperator u = DenseOperator::Identity(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  for (const Gate& g : c.gates) u = gate_matrix_full(g, c.width) * u;
  return u;
}

DenseVector apply_circuit_dense(const Circuit& c, uint64_t basis_index, uint32_t width_cap) {
  check_width(c.width, width_cap, "apply_circuit_dense");
  const uint64_t dim = uint64_t{1} << c.width;
  if (basis_index >= dim) throw std::invalid_argument("apply_circuit_dense: basis index out of range");
  DenseVector v = DenseVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(basis_index)) = 1.0;
  for (const Gate& g : c.gates) v = gate_matrix_full(g, c.width) * v;
  return v;
}

DenseOperator evolution_operator(const PauliSum& h, double t, uint32_t width_cap) {
  DenseOperator m = hamiltonian_matrix(h, width_cap);
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("evolution_operator: eigendecomposition failed");
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  DenseVector phases(values.size());
  for (Eigen::Index k = 0; k < values.size(); ++k) phases(k) = std::exp(-kI * values(k) * t);
  return vectors * phases.asDiagonal() * vectors.adjoint();
}

Distribution exact_evolution_distribution(const PauliSum& h, double t,
                                          const std::string& initial_bits, uint32_t width_cap) {
  check_width(h.width(), width_cap, "exact_evolution_distribution");
  if (initial_bits.size() != h.width())
    throw std::invalid_argument("exact_evolution_distribution: bitstring width mismatch");

  DenseOperator m = hamiltonian_matrix(h, width_cap);
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("exact_evolution_distribution: eigendecomposition failed");
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  const uint64_t x = bits_to_index(initial_bits);
  // amp = V exp(-i lambda t) V^dag e_x without forming the full operator.
  DenseVector w = vectors.row(static_cast<Eigen::Index>(x)).adjoint();
  for (Eigen::Index k = 0; k < values.size(); ++k) w(k) *= std::exp(-kI * values(k) * t);
  DenseVector amp = vectors * w;

  Distribution d;
  d.width = h.width();
  d.shots = 0;
  for (Eigen::Index i = 0; i < amp.size(); ++i) {
    double p = std::norm(amp(i));
    if (p != 0.0) d.entries.emplace(static_cast<uint64_t>(i), p);
  }
  return d;
}

}  // namespace hamsim
