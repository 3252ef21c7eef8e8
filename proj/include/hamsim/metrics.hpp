#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hamsim/distribution.hpp"

namespace hamsim {

/// Hellinger fidelity (sum_x sqrt(p(x) q(x)))^2 in [0, 1]. Counts are
/// converted to frequencies first; missing bitstrings contribute 0.
double hellinger_fidelity(const Distribution& p, const Distribution& q);

/// Rescale so that the uniform distribution maps to 0 and a perfect match to
/// 1: clamp0((raw - 1/2^width) / (1 - 1/2^width)).
double polarization(double raw, uint32_t width);

/// sqrt(f); undoes the fidelity squaring of a doubled-depth mirror circuit.
double mirror_rescale(double f);

struct FidelityValue {
  double raw = 0.0;
  double polarization = 0.0;
  uint32_t width = 0;
};

FidelityValue make_fidelity(double raw, uint32_t width);

/// (width, seconds) samples sorted by width.
using TimingSeries = std::vector<std::pair<uint32_t, double>>;

/// Smallest shared-grid width where a first exceeds b. If a starts above b,
/// that first grid point is the crossover; no sign change means no result.
/// Requires at least two shared grid points.
std::optional<uint32_t> crossover_width(const TimingSeries& a, const TimingSeries& b);

}  // namespace hamsim
