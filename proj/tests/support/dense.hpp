#pragma once

// Self-contained dense linear-algebra helpers for oracle checks. These
// deliberately do not reuse the library's gate application or Kronecker
// code paths.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "hamsim/circuit.hpp"
#include "hamsim/pauli.hpp"

namespace testsupport {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
inline const std::complex<double> kI{0.0, 1.0};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Matrix pauli1(hamsim::Pauli p) {
  Matrix m(2, 2);
  switch (p) {
    case hamsim::Pauli::I: m << 1, 0, 0, 1; break;
    case hamsim::Pauli::X: m << 0, 1, 1, 0; break;
    case hamsim::Pauli::Y: m << 0, -kI, kI, 0; break;
    case hamsim::Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Qubit 0 is the leftmost Kronecker factor.
inline Matrix pauli_string_dense(const hamsim::PauliString& s) {
  Matrix m = Matrix::Identity(1, 1);
  for (uint32_t q = 0; q < s.width(); ++q) m = kron(m, pauli1(s.factor(q)));
  return m;
}

inline Matrix gate1(hamsim::GateKind kind, double angle = 0.0) {
  Matrix m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  switch (kind) {
    case hamsim::GateKind::H: m << r, r, r, -r; break;
    case hamsim::GateKind::X: m << 0, 1, 1, 0; break;
    case hamsim::GateKind::Y: m << 0, -kI, kI, 0; break;
    case hamsim::GateKind::Z: m << 1, 0, 0, -1; break;
    case hamsim::GateKind::S: m << 1, 0, 0, kI; break;
    case hamsim::GateKind::Sdg: m << 1, 0, 0, -kI; break;
    case hamsim::GateKind::RX: m << c, -kI * s, -kI * s, c; break;
    case hamsim::GateKind::RY: m << c, -s, s, c; break;
    case hamsim::GateKind::RZ: m << std::exp(-kI * (angle / 2.0)), 0, 0, std::exp(kI * (angle / 2.0)); break;
    default: throw std::logic_error("gate1: not a one-qubit gate");
  }
  return m;
}

inline Matrix embed1(const Matrix& g, uint32_t q, uint32_t width) {
  Matrix m = Matrix::Identity(1, 1);
  for (uint32_t k = 0; k < width; ++k)
    m = kron(m, k == q ? g : Matrix::Identity(2, 2));
  return m;
}

inline Matrix cx_dense(uint32_t control, uint32_t target, uint32_t width) {
  const auto dim = Eigen::Index{1} << width;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const uint64_t cbit = uint64_t{1} << (width - 1 - control);
    const uint64_t tbit = uint64_t{1} << (width - 1 - target);
    uint64_t y = (static_cast<uint64_t>(x) & cbit) ? (static_cast<uint64_t>(x) ^ tbit)
                                                   : static_cast<uint64_t>(x);
    m(static_cast<Eigen::Index>(y), x) = 1.0;
  }
  return m;
}

inline Matrix gate_dense(const hamsim::Gate& g, uint32_t width) {
  if (g.kind == hamsim::GateKind::CX) return cx_dense(g.q0, g.q1, width);
  return embed1(gate1(g.kind, g.angle), g.q0, width);
}

inline Matrix circuit_dense(const hamsim::Circuit& c) {
  const auto dim = Eigen::Index{1} << c.width;
  Matrix u = Matrix::Identity(dim, dim);
  for (const hamsim::Gate& g : c.gates) u = gate_dense(g, c.width) * u;
  return u;
}

// exp(-i a P) = cos(a) I - i sin(a) P for a Pauli string P.
inline Matrix pauli_exponential_dense(const hamsim::PauliString& s, double a) {
  const auto dim = Eigen::Index{1} << s.width();
  return std::cos(a) * Matrix::Identity(dim, dim) - kI * std::sin(a) * pauli_string_dense(s);
}

// Jordan-Wigner annihilation operator for fermionic mode p out of n modes
// (mode p lives on qubit p).
inline Matrix jw_annihilation(uint32_t p, uint32_t n_modes) {
  Matrix a(2, 2), z(2, 2), id(2, 2);
  a << 0, 1, 0, 0;
  z << 1, 0, 0, -1;
  id << 1, 0, 0, 1;
  Matrix m = Matrix::Identity(1, 1);
  for (uint32_t k = 0; k < n_modes; ++k) m = kron(m, k < p ? z : (k == p ? a : id));
  return m;
}

inline hamsim::Circuit random_circuit(uint32_t width, size_t n_gates, std::mt19937_64& rng) {
  hamsim::Circuit c(width, "random");
  std::uniform_int_distribution<int> kind_dist(0, 9);
  std::uniform_int_distribution<uint32_t> qubit_dist(0, width - 1);
  std::uniform_real_distribution<double> angle_dist(-3.1, 3.1);
  while (c.gates.size() < n_gates) {
    int k = kind_dist(rng);
    uint32_t q = qubit_dist(rng);
    switch (k) {
      case 0: c.append(hamsim::Gate::h(q)); break;
      case 1: c.append(hamsim::Gate::x(q)); break;
      case 2: c.append(hamsim::Gate::y(q)); break;
      case 3: c.append(hamsim::Gate::z(q)); break;
      case 4: c.append(hamsim::Gate::s(q)); break;
      case 5: c.append(hamsim::Gate::sdg(q)); break;
      case 6: c.append(hamsim::Gate::rx(q, angle_dist(rng))); break;
      case 7: c.append(hamsim::Gate::ry(q, angle_dist(rng))); break;
      case 8: c.append(hamsim::Gate::rz(q, angle_dist(rng))); break;
      case 9: {
        if (width < 2) break;
        uint32_t t = qubit_dist(rng);
        while (t == q) t = qubit_dist(rng);
        c.append(hamsim::Gate::cx(q, t));
        break;
      }
    }
  }
  return c;
}

inline hamsim::PauliString random_pauli_string(uint32_t width, std::mt19937_64& rng,
                                               bool nontrivial = false) {
  std::uniform_int_distribution<int> dist(0, 3);
  for (;;) {
    hamsim::PauliString s = hamsim::PauliString::identity(width);
    for (uint32_t q = 0; q < width; ++q)
      s.set_factor(q, static_cast<hamsim::Pauli>(dist(rng)));
    if (!nontrivial || !s.is_identity()) return s;
  }
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Distance up to global phase: min over phases of ||A - e^{i phi} B||_max.
inline double phase_free_diff(const Matrix& a, const Matrix& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  std::complex<double> phase = a(r, c) / b(r, c);
  phase /= std::abs(phase);
  return max_abs_diff(a, phase * b);
}

}  // namespace testsupport
