#include "hamsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamsim {

double hellinger_fidelity(const Distribution& p, const Distribution& q) {
  if (p.width != q.width)
    throw std::invalid_argument("hellinger_fidelity: width mismatch (" + std::to_string(p.width) +
                                " vs " + std::to_string(q.width) + ")");
  if (p.entries.empty() || q.entries.empty())
    throw std::invalid_argument("hellinger_fidelity: empty distribution");

  auto pn = p.normalized();
  auto qn = q.normalized();
  const auto& small = pn.size() <= qn.size() ? pn : qn;
  const auto& large = pn.size() <= qn.size() ? qn : pn;

  double bc = 0.0;  // Bhattacharyya coefficient
  for (const auto& [index, ps] : small) {
    auto it = large.find(index);
    if (it != large.end()) bc += std::sqrt(ps * it->second);
  }
  double f = std::min(bc * bc, 1.0);
  // equal distributions give exactly 1; rounding in sqrt/sum stays far below
  // this threshold for genuinely different inputs
  return f >= 1.0 - 1e-12 ? 1.0 : f;
}

double polarization(double raw, uint32_t width) {
  const double inv_d = std::ldexp(1.0, -static_cast<int>(width));
  return std::max(0.0, (raw - inv_d) / (1.0 - inv_d));
}

double mirror_rescale(double f) { return std::sqrt(f); }

FidelityValue make_fidelity(double raw, uint32_t width) {
  return FidelityValue{raw, polarization(raw, width), width};
}

std::optional<uint32_t> crossover_width(const TimingSeries& a, const TimingSeries& b) {
  // Intersect the (sorted) width grids.
  std::vector<std::pair<double, double>> shared;
  std::vector<uint32_t> widths;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      widths.push_back(a[i].first);
      shared.emplace_back(a[i].second, b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  if (shared.size() < 2)
    throw std::invalid_argument("crossover_width: fewer than 2 shared grid points");

  if (shared[0].first > shared[0].second) return widths[0];
  for (size_t k = 1; k < shared.size(); ++k)
    if (shared[k].first > shared[k].second && shared[k - 1].first <= shared[k - 1].second)
      return widths[k];
  return std::nullopt;
}

}  // namespace hamsim
