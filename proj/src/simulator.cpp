#include "hamsim/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "hamsim/rng.hpp"

namespace hamsim {

namespace {

using Clock = std::chrono::steady_clock;

uint64_t ns_since(Clock::time_point t0) {
  return static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

void gate_matrix(const Gate& g, std::complex<double> m[4]) {
  constexpr std::complex<double> i1(0.0, 1.0);
  const double invsqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      m[0] = invsqrt2; m[1] = invsqrt2;
      m[2] = invsqrt2; m[3] = -invsqrt2;
      return;
    case GateKind::X:
      m[0] = 0; m[1] = 1;
      m[2] = 1; m[3] = 0;
      return;
    case GateKind::Y:
      m[0] = 0; m[1] = -i1;
      m[2] = i1; m[3] = 0;
      return;
    case GateKind::Z:
      m[0] = 1; m[1] = 0;
      m[2] = 0; m[3] = -1;
      return;
    case GateKind::S:
      m[0] = 1; m[1] = 0;
      m[2] = 0; m[3] = i1;
      return;
    case GateKind::Sdg:
      m[0] = 1; m[1] = 0;
      m[2] = 0; m[3] = -i1;
      return;
    case GateKind::RX: {
      double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
      m[0] = c; m[1] = -i1 * s;
      m[2] = -i1 * s; m[3] = c;
      return;
    }
    case GateKind::RY: {
      double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
      m[0] = c; m[1] = -s;
      m[2] = s; m[3] = c;
      return;
    }
    case GateKind::RZ: {
      m[0] = std::exp(-i1 * (g.angle / 2.0));
      m[1] = 0; m[2] = 0;
      m[3] = std::exp(i1 * (g.angle / 2.0));
      return;
    }
    case GateKind::CX:
      throw std::logic_error("CX has no 2x2 matrix");
  }
}

void check_initial_bits(const std::string& bits, uint32_t width) {
  if (bits.size() != width)
    throw std::invalid_argument("initial bitstring length " + std::to_string(bits.size()) +
                                " does not match circuit width " + std::to_string(width));
}

void check_cap(uint32_t width, uint32_t cap) {
  if (width > cap)
    throw std::invalid_argument("width " + std::to_string(width) + " exceeds simulator cap " +
                                std::to_string(cap));
}

}  // namespace

Statevector::Statevector(uint32_t width, uint64_t basis_index)
    : width_(width), amps_(uint64_t{1} << width) {
  if (basis_index >= dim()) throw std::invalid_argument("basis index out of range");
  amps_[basis_index] = 1.0;
}

void Statevector::apply_matrix1(uint32_t q, const std::complex<double> m[4]) {
  const uint64_t stride = uint64_t{1} << (width_ - 1 - q);
  const uint64_t n = dim();
  const std::complex<double> m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
  for (uint64_t block = 0; block < n; block += 2 * stride) {
    for (uint64_t i = block; i < block + stride; ++i) {
      const std::complex<double> a0 = amps_[i];
      const std::complex<double> a1 = amps_[i + stride];
      amps_[i] = m00 * a0 + m01 * a1;
      amps_[i + stride] = m10 * a0 + m11 * a1;
    }
  }
}

void Statevector::apply_cx(uint32_t control, uint32_t target) {
  const uint64_t cbit = uint64_t{1} << (width_ - 1 - control);
  const uint64_t tbit = uint64_t{1} << (width_ - 1 - target);
  const uint64_t n = dim();
  for (uint64_t i = 0; i < n; ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
}

void Statevector::apply(const Gate& g) {
  if (g.q0 >= width_ || (g.kind == GateKind::CX && g.q1 >= width_))
    throw std::invalid_argument("gate qubit out of range");
  if (g.kind == GateKind::CX) {
    apply_cx(g.q0, g.q1);
    return;
  }
  std::complex<double> m[4];
  gate_matrix(g, m);
  apply_matrix1(g.q0, m);
}

void Statevector::apply_pauli(uint32_t q, Pauli p) {
  constexpr std::complex<double> i1(0.0, 1.0);
  const uint64_t bit = uint64_t{1} << (width_ - 1 - q);
  const uint64_t n = dim();
  switch (p) {
    case Pauli::I: return;
    case Pauli::X:
      for (uint64_t i = 0; i < n; ++i)
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
      return;
    case Pauli::Y:
      for (uint64_t i = 0; i < n; ++i)
        if (!(i & bit)) {
          const std::complex<double> a0 = amps_[i];
          amps_[i] = -i1 * amps_[i | bit];
          amps_[i | bit] = i1 * a0;
        }
      return;
    case Pauli::Z:
      for (uint64_t i = 0; i < n; ++i)
        if (i & bit) amps_[i] = -amps_[i];
      return;
  }
}

double Statevector::norm_sq() const {
  double t = 0.0;
  for (const auto& a : amps_) t += std::norm(a);
  return t;
}

void NoiseModel::validate() const {
  for (double p : {p1, p2, p_ro})
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("noise probabilities must lie in [0, 1]");
}

RunIdealResult run_ideal(const Circuit& c, const std::string& initial_bits, uint32_t width_cap) {
  const auto t0 = Clock::now();
  check_cap(c.width, width_cap);
  check_initial_bits(initial_bits, c.width);

  Statevector state(c.width, bits_to_index(initial_bits));
  const auto k0 = Clock::now();
  for (const Gate& g : c.gates) state.apply(g);
  Timing timing;
  timing.kernel_ns = ns_since(k0);
  timing.elapsed_ns = ns_since(t0);
  return {std::move(state), timing};
}

Distribution measure_analytic(const Statevector& s) {
  Distribution d;
  d.width = s.width();
  d.shots = 0;
  const auto& amps = s.amplitudes();
  for (uint64_t i = 0; i < amps.size(); ++i) {
    double p = std::norm(amps[i]);
    if (p != 0.0) d.entries.emplace(i, p);
  }
  return d;
}

namespace {

// Cumulative probabilities for inverse-transform sampling.
std::vector<double> build_cdf(const Statevector& s) {
  std::vector<double> cdf(s.dim());
  double acc = 0.0;
  const auto& amps = s.amplitudes();
  for (uint64_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[i] = acc;
  }
  return cdf;
}

uint64_t draw_from_cdf(const std::vector<double>& cdf, double u) {
  double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  if (it == cdf.end()) --it;
  return static_cast<uint64_t>(it - cdf.begin());
}

uint64_t apply_readout_flips(uint64_t index, uint32_t width, double p_ro, Rng& rng) {
  if (p_ro == 0.0) return index;
  for (uint32_t q = 0; q < width; ++q)
    if (rng.bernoulli(p_ro)) index ^= uint64_t{1} << (width - 1 - q);
  return index;
}

}  // namespace

Distribution sample(const Statevector& s, uint64_t shots, uint64_t seed, double p_ro,
                    Timing& timing) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  if (!(p_ro >= 0.0 && p_ro <= 1.0))
    throw std::invalid_argument("sample: readout probability must lie in [0, 1]");
  const auto t0 = Clock::now();

  Distribution d;
  d.width = s.width();
  d.shots = shots;
  const auto k0 = Clock::now();
  std::vector<double> cdf = build_cdf(s);
  Rng rng(seed);
  for (uint64_t shot = 0; shot < shots; ++shot) {
    uint64_t index = draw_from_cdf(cdf, rng.uniform());
    index = apply_readout_flips(index, s.width(), p_ro, rng);
    d.entries[index] += 1.0;
  }
  timing.kernel_ns += ns_since(k0);
  timing.elapsed_ns += ns_since(t0);
  return d;
}

Distribution sample(const Statevector& s, uint64_t shots, uint64_t seed, double p_ro) {
  Timing timing;
  return sample(s, shots, seed, p_ro, timing);
}

namespace {

struct NoiseEvent {
  size_t gate_index;
  uint32_t code;  // 1..3 single-qubit Pauli, 1..15 two-qubit Pauli pair
};

// One Bernoulli draw per noise site, in gate order.
void draw_noise_events(const Circuit& c, const NoiseModel& noise, Rng& rng,
                       std::vector<NoiseEvent>& events) {
  events.clear();
  for (size_t i = 0; i < c.gates.size(); ++i) {
    if (c.gates[i].kind == GateKind::CX) {
      if (noise.p2 > 0.0 && rng.bernoulli(noise.p2))
        events.push_back({i, static_cast<uint32_t>(1 + rng.bounded(15))});
    } else {
      if (noise.p1 > 0.0 && rng.bernoulli(noise.p1))
        events.push_back({i, static_cast<uint32_t>(1 + rng.bounded(3))});
    }
  }
}

uint64_t replay_with_errors(const Circuit& c, uint64_t initial_index,
                            const std::vector<NoiseEvent>& events, Rng& rng) {
  Statevector state(c.width, initial_index);
  size_t next = 0;
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    state.apply(g);
    while (next < events.size() && events[next].gate_index == i) {
      uint32_t code = events[next].code;
      if (g.kind == GateKind::CX) {
        state.apply_pauli(g.q0, static_cast<Pauli>(code >> 2));
        state.apply_pauli(g.q1, static_cast<Pauli>(code & 3));
      } else {
        state.apply_pauli(g.q0, static_cast<Pauli>(code));
      }
      ++next;
    }
  }
  // Inverse-transform draw directly off the final amplitudes.
  double u = rng.uniform();
  double acc = 0.0;
  const auto& amps = state.amplitudes();
  for (uint64_t x = 0; x < amps.size(); ++x) {
    acc += std::norm(amps[x]);
    if (u < acc) return x;
  }
  return amps.size() - 1;
}

}  // namespace

RunNoisyResult run_noisy(const Circuit& c, const std::string& initial_bits,
                         const NoiseModel& noise, uint64_t shots, uint64_t seed,
                         uint32_t width_cap) {
  const auto t0 = Clock::now();
  check_cap(c.width, width_cap);
  check_initial_bits(initial_bits, c.width);
  noise.validate();
  if (shots < 1) throw std::invalid_argument("run_noisy: shots must be >= 1 (use the analytic path)");

  const uint64_t initial_index = bits_to_index(initial_bits);
  Timing timing;

  // Error-free trajectories all end in the ideal state; evolve it once and
  // reuse its cdf for those shots.
  const auto k0 = Clock::now();
  Statevector ideal(c.width, initial_index);
  for (const Gate& g : c.gates) ideal.apply(g);
  std::vector<double> ideal_cdf = build_cdf(ideal);
  timing.kernel_ns += ns_since(k0);

  Distribution d;
  d.width = c.width;
  d.shots = shots;
  std::vector<NoiseEvent> events;
  for (uint64_t shot = 0; shot < shots; ++shot) {
    Rng rng(derive_seed(seed, shot));
    draw_noise_events(c, noise, rng, events);
    const auto s0 = Clock::now();
    uint64_t index = events.empty() ? draw_from_cdf(ideal_cdf, rng.uniform())
                                    : replay_with_errors(c, initial_index, events, rng);
    index = apply_readout_flips(index, c.width, noise.p_ro, rng);
    timing.kernel_ns += ns_since(s0);
    d.entries[index] += 1.0;
  }

  timing.elapsed_ns = ns_since(t0);
  return {std::move(d), timing};
}

}  // namespace hamsim
