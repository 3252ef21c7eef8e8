#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hamsim/circuit.hpp"
#include "hamsim/exact.hpp"
#include "hamsim/metrics.hpp"
#include "hamsim/mirror.hpp"
#include "hamsim/models.hpp"
#include "hamsim/pauli.hpp"
#include "hamsim/simulator.hpp"
#include "hamsim/trotter.hpp"

namespace hamsim {

using ordered_json = nlohmann::ordered_json;

enum class MethodId {
  M1,
  M2,
  M2_noiseless,
  M3_simple,
  M3_random_pauli,
  M3_multi_random_pauli,
  M1_inverse,
  M1_K10_sqrt,
  M1_K10_inverse_sqrt,
  M1_K10_t1e9_sqrt,
};

std::string method_name(MethodId m);
std::optional<MethodId> method_from_name(const std::string& name);
/// Methods whose rescaled fidelity is sqrt(raw) rather than polarization.
bool method_uses_sqrt(MethodId m);

/// Built-in generator name plus one parameter object per sweep point.
/// Recognized names: tfim, heisenberg, max3sat, fh1d, file.
struct ModelSpec {
  std::string name;
  std::vector<ordered_json> param_sets;
};

/// Instantiate a model at a given qubit width. `instance_seed` only matters
/// for max3sat (clause sampling).
PauliSum build_model(const std::string& name, const ordered_json& params, uint32_t width,
                     uint64_t instance_seed);

struct BenchConfig {
  ModelSpec model;
  std::vector<uint32_t> widths;  // ascending
  TrotterConfig trotter;
  uint64_t shots = 1000;  // 0 = analytic test distribution
  NoiseModel noise;
  std::vector<MethodId> methods;
  uint64_t seed = 1;
  int n_pauli_samples = 10;
  uint32_t width_cap = kDefaultWidthCap;
  uint32_t exact_cap = kExactWidthCap;

  void validate() const;
};

struct BenchRecord {
  std::string model;
  ordered_json params;
  uint32_t width = 0;
  MethodId method = MethodId::M1;
  uint64_t seed = 0;
  double raw_fidelity = 0.0;
  double polarization_fidelity = 0.0;
  double rescaled_fidelity = 0.0;
  DepthMetrics depth;
  uint64_t elapsed_ns = 0;
  uint64_t kernel_ns = 0;
  uint64_t shots = 0;
  std::string timestamp;
};

ordered_json record_to_json(const BenchRecord& r);
BenchRecord record_from_json(const ordered_json& j);

/// Resume key: hash of (model, params, width, method, seed) as 16 hex chars.
std::string record_key(const std::string& model, const ordered_json& params, uint32_t width,
                       const std::string& method, uint64_t seed);

/// Seed for one sweep cell, stable under re-runs and resume.
uint64_t cell_seed(const BenchConfig& cfg, const ordered_json& params, uint32_t width,
                   MethodId method);
/// Seed for the model instance, shared by every method at a sweep point.
uint64_t instance_seed(const BenchConfig& cfg, const ordered_json& params, uint32_t width);

struct RunContext {
  std::string model_name;
  ordered_json params;
  uint64_t seed = 0;
};

/// Noisy execution of prep + Trotter against the same circuit's noiseless
/// analytic distribution; isolates hardware-style noise.
BenchRecord run_method1(const PauliSum& h, uint32_t width, const BenchConfig& cfg,
                        const RunContext& ctx);

/// Execution against exact diagonalization; noiseless variant isolates the
/// product-formula error.
BenchRecord run_method2(const PauliSum& h, uint32_t width, const BenchConfig& cfg,
                        const RunContext& ctx, bool noiseless);

/// Mirror-circuit execution from the checkerboard state; the reference is
/// the known output bitstring, so no classical simulation is needed.
BenchRecord run_method3(const PauliSum& h, uint32_t width, const BenchConfig& cfg,
                        const RunContext& ctx, const MirrorVariant& variant);

enum class Method1Variant { inverse, k10_sqrt, k10_inverse_sqrt, k10_t1e9_sqrt };

BenchRecord run_method1_variant(const PauliSum& h, uint32_t width, const BenchConfig& cfg,
                                const RunContext& ctx, Method1Variant which);

BenchRecord run_cell(const PauliSum& h, uint32_t width, MethodId method, const BenchConfig& cfg,
                     const RunContext& ctx);

/// Cartesian product over param sets x widths x methods, appending one JSONL
/// row per cell to out_path as cells complete. Failures become error rows
/// and the sweep continues. Cells whose key is already present in the file
/// are skipped, so interrupted sweeps resume without duplicates. Returns the
/// records executed by this call.
std::vector<BenchRecord> sweep(const BenchConfig& cfg, const std::string& out_path);

struct Aggregate {
  uint32_t width = 0;
  std::string method;
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
  size_t count = 0;
};

/// Min/mean/max of rescaled fidelity per (width, method), sorted by
/// (method, width).
std::vector<Aggregate> aggregate_records(const std::vector<BenchRecord>& records);

enum class Backend { ideal, noisy };

struct TimingRow {
  std::string model;
  uint32_t width = 0;
  uint64_t shots = 0;
  std::string backend;
  uint64_t elapsed_ns = 0;
  uint64_t kernel_ns = 0;
};

/// Per-width elapsed/kernel times of a Method-1-style execution (prep +
/// Trotter, sampled with `shots`). Widths beyond the cap are dropped with a
/// warning. Appends JSONL rows to out_path when non-empty.
std::vector<TimingRow> timing_study(const ModelSpec& model, const std::vector<uint32_t>& widths,
                                    uint64_t shots, Backend backend, const TrotterConfig& trotter,
                                    const NoiseModel& noise, uint64_t seed, uint32_t width_cap,
                                    const std::string& out_path);

std::vector<TimingRow> load_timing_rows(const std::string& path);

/// Extract a (width, seconds) series from timing rows; field is "kernel" or
/// "elapsed". Rows sharing a width are averaged.
TimingSeries timing_series(const std::vector<TimingRow>& rows, const std::string& field);

std::vector<BenchRecord> load_records(const std::string& path);

}  // namespace hamsim
