#include "doctest.h"

#include <random>

#include "hamsim/circuit.hpp"
#include "support/dense.hpp"

using namespace hamsim;
namespace ts = testsupport;

TEST_CASE("invert: examples") {
  Circuit c(1);
  c.append(Gate::h(0));
  Circuit inv = invert(c);
  REQUIRE(inv.gates.size() == 1);
  CHECK(inv.gates[0] == Gate::h(0));

  Circuit c2(2);
  c2.append(Gate::rz(0, 0.3));
  c2.append(Gate::cx(0, 1));
  Circuit inv2 = invert(c2);
  REQUIRE(inv2.gates.size() == 2);
  CHECK(inv2.gates[0] == Gate::cx(0, 1));
  CHECK(inv2.gates[1] == Gate::rz(0, -0.3));
}

TEST_CASE("invert is an involution and a matrix inverse") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 12; ++trial) {
    uint32_t width = 2 + static_cast<uint32_t>(rng() % 5);  // 2..6
    Circuit c = ts::random_circuit(width, 20 + rng() % 41, rng);

    Circuit twice = invert(invert(c));
    REQUIRE(twice.gates.size() == c.gates.size());
    for (size_t i = 0; i < c.gates.size(); ++i) CHECK(twice.gates[i] == c.gates[i]);

    ts::Matrix u = ts::circuit_dense(c);
    ts::Matrix v = ts::circuit_dense(invert(c));
    CHECK(ts::max_abs_diff(v, u.adjoint()) < 1e-10);
    const auto dim = u.rows();
    CHECK(ts::max_abs_diff(v * u, ts::Matrix::Identity(dim, dim)) < 1e-10);
  }
}

TEST_CASE("depth_metrics: examples") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::h(1));
  DepthMetrics m = depth_metrics(c);
  CHECK(m.layered_depth == 1);
  CHECK(m.gate_count == 2);
  CHECK(m.two_qubit_count == 0);

  Circuit c2(1);
  c2.append(Gate::h(0));
  c2.append(Gate::rz(0, 0.1));
  CHECK(depth_metrics(c2).layered_depth == 2);

  Circuit c3(3);
  c3.append(Gate::cx(0, 2));
  c3.append(Gate::h(1));
  c3.append(Gate::cx(1, 2));
  DepthMetrics m3 = depth_metrics(c3);
  CHECK(m3.layered_depth == 2);
  CHECK(m3.two_qubit_count == 2);
}

TEST_CASE("layered depth is invariant under qubit relabeling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    uint32_t width = 3 + static_cast<uint32_t>(rng() % 4);
    Circuit c = ts::random_circuit(width, 40, rng);

    std::vector<uint32_t> perm(width);
    for (uint32_t q = 0; q < width; ++q) perm[q] = q;
    std::shuffle(perm.begin(), perm.end(), rng);

    Circuit relabeled(width);
    for (Gate g : c.gates) {
      g.q0 = perm[g.q0];
      if (g.kind == GateKind::CX) g.q1 = perm[g.q1];
      relabeled.append(g);
    }
    CHECK(depth_metrics(c).layered_depth == depth_metrics(relabeled).layered_depth);
  }
}

TEST_CASE("concat: examples and operator order") {
  Circuit empty(2);
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  CHECK(concat(empty, c).gates.size() == c.gates.size());
  CHECK(concat(c, invert(c)).gates.size() == 2 * c.gates.size());
  CHECK_THROWS_AS(concat(c, Circuit(3)), std::invalid_argument);

  std::mt19937_64 rng(9);
  Circuit a = ts::random_circuit(3, 15, rng);
  Circuit b = ts::random_circuit(3, 15, rng);
  // time order: a first, so as matrices U = U_b * U_a
  CHECK(ts::max_abs_diff(ts::circuit_dense(concat(a, b)),
                         ts::circuit_dense(b) * ts::circuit_dense(a)) < 1e-10);
}

TEST_CASE("append validates gates") {
  Circuit c(2);
  CHECK_THROWS_AS(c.append(Gate::h(2)), std::invalid_argument);
  CHECK_THROWS_AS(c.append(Gate::cx(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(c.append(Gate::rz(0, std::nan(""))), std::invalid_argument);
}

TEST_CASE("debug serialization") {
  Circuit c(3);
  c.append(Gate::h(2));
  c.append(Gate::cx(0, 1));
  c.append(Gate::rz(1, 0.25));
  CHECK(to_debug_text(c) == "h 2\ncx 0 1\nrz 1 0.25\n");
}
