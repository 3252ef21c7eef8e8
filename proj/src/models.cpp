#include "hamsim/models.hpp"

#include <cmath>
#include <stdexcept>

#include "hamsim/rng.hpp"

namespace hamsim {

namespace {

std::vector<std::pair<uint32_t, uint32_t>> chain_edges(uint32_t n, BoundaryCondition bc) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (bc == BoundaryCondition::periodic) edges.emplace_back(n - 1, 0);
  return edges;
}

PauliString two_site(uint32_t width, uint32_t a, Pauli pa, uint32_t b, Pauli pb) {
  PauliString s = PauliString::identity(width);
  s.set_factor(a, pa);
  s.set_factor(b, pb);
  return s;
}

PauliString one_site(uint32_t width, uint32_t a, Pauli p) {
  PauliString s = PauliString::identity(width);
  s.set_factor(a, p);
  return s;
}

}  // namespace

PauliSum tfim(uint32_t n, double h, BoundaryCondition bc) {
  if (n < 2) throw std::invalid_argument("tfim: width must be >= 2");
  PauliSum sum(n);
  for (uint32_t i = 0; i < n; ++i) sum.add(h, one_site(n, i, Pauli::X));
  for (auto [i, j] : chain_edges(n, bc)) sum.add(1.0, two_site(n, i, Pauli::Z, j, Pauli::Z));
  return sum;
}

PauliSum heisenberg(uint32_t n, double h, BoundaryCondition bc) {
  if (n < 2) throw std::invalid_argument("heisenberg: width must be >= 2");
  PauliSum sum(n);
  for (auto [i, j] : chain_edges(n, bc)) {
    sum.add(1.0, two_site(n, i, Pauli::X, j, Pauli::X));
    sum.add(1.0, two_site(n, i, Pauli::Y, j, Pauli::Y));
    sum.add(1.0, two_site(n, i, Pauli::Z, j, Pauli::Z));
  }
  for (uint32_t i = 0; i < n; ++i) sum.add(h, one_site(n, i, Pauli::Z));
  return sum;
}

std::pair<PauliSum, Max3SatInstance> max3sat(uint32_t n, double clause_ratio, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("max3sat: need at least 3 variables");
  if (!(clause_ratio > 0.0)) throw std::invalid_argument("max3sat: clause ratio must be > 0");

  Max3SatInstance inst;
  inst.n_vars = n;
  inst.seed = seed;
  auto m = static_cast<uint32_t>(std::llround(clause_ratio * n));

  Rng rng(seed);
  for (uint32_t c = 0; c < m; ++c) {
    Max3SatClause clause;
    for (int k = 0; k < 3; ++k) {
      uint32_t var;
      bool distinct;
      do {
        var = static_cast<uint32_t>(rng.bounded(n));
        distinct = true;
        for (int j = 0; j < k; ++j)
          if (clause.literals[static_cast<size_t>(j)].var == var) distinct = false;
      } while (!distinct);
      clause.literals[static_cast<size_t>(k)] = {var, rng.bernoulli(0.5)};
    }
    inst.clauses.push_back(clause);
  }

  PauliSum sum(n);
  for (const Max3SatClause& clause : inst.clauses) {
    // I - (1/8) prod_k (I + s_k Z_k), s_k = -1 for a negated literal.
    sum.add(7.0 / 8.0, PauliString::identity(n));
    for (int subset = 1; subset < 8; ++subset) {
      PauliString s = PauliString::identity(n);
      double sign = 1.0;
      for (int k = 0; k < 3; ++k) {
        if (!(subset & (1 << k))) continue;
        const Max3SatLiteral& lit = clause.literals[static_cast<size_t>(k)];
        s.set_factor(lit.var, Pauli::Z);
        if (lit.negated) sign = -sign;
      }
      sum.add(-sign / 8.0, std::move(s));
    }
  }
  return {std::move(sum), std::move(inst)};
}

PauliSum fermi_hubbard_1d_jw(uint32_t n_sites, double t_hop, double u, BoundaryCondition bc) {
  if (n_sites < 2) throw std::invalid_argument("fermi_hubbard_1d_jw: need at least 2 sites");
  const uint32_t width = 2 * n_sites;
  PauliSum sum(width);

  auto mode = [](uint32_t site, uint32_t spin) { return 2 * site + spin; };

  // Hopping: c^dag_p c_q + h.c. = (1/2)(X_p Z..Z X_q + Y_p Z..Z Y_q), p < q.
  for (auto [i, j] : chain_edges(n_sites, bc)) {
    for (uint32_t spin = 0; spin < 2; ++spin) {
      uint32_t p = mode(i, spin);
      uint32_t q = mode(j, spin);
      if (p > q) std::swap(p, q);
      for (Pauli end : {Pauli::X, Pauli::Y}) {
        PauliString s = PauliString::identity(width);
        s.set_factor(p, end);
        s.set_factor(q, end);
        for (uint32_t k = p + 1; k < q; ++k) s.set_factor(k, Pauli::Z);
        sum.add(-t_hop / 2.0, std::move(s));
      }
    }
  }

  // On-site interaction: U n_up n_down = (U/4)(I - Z_up)(I - Z_down).
  for (uint32_t i = 0; i < n_sites; ++i) {
    uint32_t a = mode(i, 0);
    uint32_t b = mode(i, 1);
    sum.add(u / 4.0, PauliString::identity(width));
    sum.add(-u / 4.0, one_site(width, a, Pauli::Z));
    sum.add(-u / 4.0, one_site(width, b, Pauli::Z));
    sum.add(u / 4.0, two_site(width, a, Pauli::Z, b, Pauli::Z));
  }
  return sum;
}

}  // namespace hamsim
