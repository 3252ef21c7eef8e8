#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamsim/bench.hpp"

namespace hamsim {

/// RFC-4180 CSV with one header row; params is embedded as a JSON string.
void write_records_csv(const std::vector<BenchRecord>& records, const std::string& path);
std::vector<BenchRecord> read_records_csv(const std::string& path);

/// Mean rescaled fidelity vs width per method, with a min/max band over the
/// remaining parameters. Deterministic output (golden-file friendly).
void write_fidelity_svg(const std::vector<BenchRecord>& records, const std::string& path);

/// Mean layered depth vs width per method.
void write_depth_svg(const std::vector<BenchRecord>& records, const std::string& path);

/// Kernel and elapsed seconds vs width per backend on a log time axis; the
/// kernel-vs-kernel crossover of the first two backends is marked when it
/// exists.
void write_timing_svg(const std::vector<TimingRow>& rows, const std::string& path);

}  // namespace hamsim
