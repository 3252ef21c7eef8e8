#include "hamsim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hamsim/rng.hpp"

namespace hamsim {

std::string method_name(MethodId m) {
  switch (m) {
    case MethodId::M1: return "M1";
    case MethodId::M2: return "M2";
    case MethodId::M2_noiseless: return "M2_noiseless";
    case MethodId::M3_simple: return "M3_simple";
    case MethodId::M3_random_pauli: return "M3_random_pauli";
    case MethodId::M3_multi_random_pauli: return "M3_multi_random_pauli";
    case MethodId::M1_inverse: return "M1_inverse";
    case MethodId::M1_K10_sqrt: return "M1_K10_sqrt";
    case MethodId::M1_K10_inverse_sqrt: return "M1_K10_inverse_sqrt";
    case MethodId::M1_K10_t1e9_sqrt: return "M1_K10_t1e9_sqrt";
  }
  throw std::logic_error("invalid MethodId");
}

std::optional<MethodId> method_from_name(const std::string& name) {
  static const std::map<std::string, MethodId> kNames = {
      {"M1", MethodId::M1},
      {"M2", MethodId::M2},
      {"M2_noiseless", MethodId::M2_noiseless},
      {"M3_simple", MethodId::M3_simple},
      {"M3_random_pauli", MethodId::M3_random_pauli},
      {"M3_multi_random_pauli", MethodId::M3_multi_random_pauli},
      {"M1_inverse", MethodId::M1_inverse},
      {"M1_K10_sqrt", MethodId::M1_K10_sqrt},
      {"M1_K10_inverse_sqrt", MethodId::M1_K10_inverse_sqrt},
      {"M1_K10_t1e9_sqrt", MethodId::M1_K10_t1e9_sqrt},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

bool method_uses_sqrt(MethodId m) {
  switch (m) {
    case MethodId::M3_simple:
    case MethodId::M3_random_pauli:
    case MethodId::M3_multi_random_pauli:
    case MethodId::M1_K10_sqrt:
    case MethodId::M1_K10_inverse_sqrt:
    case MethodId::M1_K10_t1e9_sqrt: return true;
    default: return false;
  }
}

PauliSum build_model(const std::string& name, const ordered_json& params, uint32_t width,
                     uint64_t inst_seed) {
  auto bc = [&]() {
    return params.value("periodic", false) ? BoundaryCondition::periodic : BoundaryCondition::open;
  };
  if (name == "tfim") return tfim(width, params.value("h", 1.0), bc());
  if (name == "heisenberg") return heisenberg(width, params.value("h", 1.0), bc());
  if (name == "max3sat") return max3sat(width, params.value("ratio", 3.0), inst_seed).first;
  if (name == "fh1d") {
    if (width % 2 != 0)
      throw std::invalid_argument("fh1d: qubit width must be even (2 qubits per site)");
    return fermi_hubbard_1d_jw(width / 2, params.value("t_hop", 1.0), params.value("u", 4.0), bc());
  }
  if (name == "file") {
    PauliSum h = parse_pauli_sum_file(params.at("path").get<std::string>());
    if (h.width() != width)
      throw std::invalid_argument("file model width " + std::to_string(h.width()) +
                                  " does not match requested width " + std::to_string(width));
    return h;
  }
  throw std::invalid_argument("unknown model '" + name + "'");
}

void BenchConfig::validate() const {
  if (model.name.empty()) throw std::invalid_argument("BenchConfig: model name is empty");
  if (model.param_sets.empty()) throw std::invalid_argument("BenchConfig: no parameter sets");
  if (methods.empty()) throw std::invalid_argument("BenchConfig: no methods");
  if (widths.empty() && model.name != "file")
    throw std::invalid_argument("BenchConfig: no widths");
  if (!std::is_sorted(widths.begin(), widths.end()))
    throw std::invalid_argument("BenchConfig: widths must be ascending");
  noise.validate();
}

ordered_json record_to_json(const BenchRecord& r) {
  ordered_json j;
  j["model"] = r.model;
  j["params"] = r.params;
  j["width"] = r.width;
  j["method"] = method_name(r.method);
  j["seed"] = r.seed;
  j["raw_fidelity"] = r.raw_fidelity;
  j["polarization_fidelity"] = r.polarization_fidelity;
  j["rescaled_fidelity"] = r.rescaled_fidelity;
  j["layered_depth"] = r.depth.layered_depth;
  j["gate_count"] = r.depth.gate_count;
  j["two_qubit_count"] = r.depth.two_qubit_count;
  j["elapsed_ns"] = r.elapsed_ns;
  j["kernel_ns"] = r.kernel_ns;
  j["shots"] = r.shots;
  j["timestamp"] = r.timestamp;
  return j;
}

BenchRecord record_from_json(const ordered_json& j) {
  BenchRecord r;
  r.model = j.at("model").get<std::string>();
  r.params = j.at("params");
  r.width = j.at("width").get<uint32_t>();
  auto m = method_from_name(j.at("method").get<std::string>());
  if (!m) throw std::invalid_argument("unknown method in record");
  r.method = *m;
  r.seed = j.at("seed").get<uint64_t>();
  r.raw_fidelity = j.at("raw_fidelity").get<double>();
  r.polarization_fidelity = j.at("polarization_fidelity").get<double>();
  r.rescaled_fidelity = j.at("rescaled_fidelity").get<double>();
  r.depth.layered_depth = j.at("layered_depth").get<uint32_t>();
  r.depth.gate_count = j.at("gate_count").get<uint32_t>();
  r.depth.two_qubit_count = j.at("two_qubit_count").get<uint32_t>();
  r.elapsed_ns = j.at("elapsed_ns").get<uint64_t>();
  r.kernel_ns = j.at("kernel_ns").get<uint64_t>();
  r.shots = j.at("shots").get<uint64_t>();
  r.timestamp = j.value("timestamp", "");
  return r;
}

std::string record_key(const std::string& model, const ordered_json& params, uint32_t width,
                       const std::string& method, uint64_t seed) {
  std::string material = model;
  material += '\x1f';
  material += params.dump();
  material += '\x1f';
  material += std::to_string(width);
  material += '\x1f';
  material += method;
  material += '\x1f';
  material += std::to_string(seed);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(splitmix64(fnv1a64(material))));
  return buf;
}

uint64_t cell_seed(const BenchConfig& cfg, const ordered_json& params, uint32_t width,
                   MethodId method) {
  std::string material = "cell\x1f" + cfg.model.name + '\x1f' + params.dump() + '\x1f' +
                         std::to_string(width) + '\x1f' + method_name(method);
  return derive_seed(cfg.seed, fnv1a64(material));
}

uint64_t instance_seed(const BenchConfig& cfg, const ordered_json& params, uint32_t width) {
  // Method-independent so every method sees the same model instance.
  std::string material =
      "instance\x1f" + cfg.model.name + '\x1f' + params.dump() + '\x1f' + std::to_string(width);
  return derive_seed(cfg.seed, fnv1a64(material));
}

namespace {

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Execution {
  Distribution distribution;
  Timing timing;
};

// Test-side execution: noisy trajectories when shots > 0, otherwise the
// analytic distribution of an ideal run.
Execution execute_test(const Circuit& c, const std::string& initial_bits, const BenchConfig& cfg,
                       uint64_t exec_seed) {
  if (cfg.shots == 0) {
    RunIdealResult res = run_ideal(c, initial_bits, cfg.width_cap);
    return {measure_analytic(res.state), res.timing};
  }
  RunNoisyResult res = run_noisy(c, initial_bits, cfg.noise, cfg.shots, exec_seed, cfg.width_cap);
  return {std::move(res.distribution), res.timing};
}

BenchRecord finalize(const RunContext& ctx, uint32_t width, MethodId method,
                     const BenchConfig& cfg, const Circuit& executed, double raw,
                     const Timing& timing) {
  BenchRecord r;
  r.model = ctx.model_name;
  r.params = ctx.params;
  r.width = width;
  r.method = method;
  r.seed = ctx.seed;
  r.raw_fidelity = raw;
  r.polarization_fidelity = polarization(raw, width);
  r.rescaled_fidelity = method_uses_sqrt(method) ? mirror_rescale(raw) : r.polarization_fidelity;
  r.depth = depth_metrics(executed);
  r.elapsed_ns = timing.elapsed_ns;
  r.kernel_ns = timing.kernel_ns;
  r.shots = cfg.shots;
  r.timestamp = utc_timestamp();
  return r;
}

Circuit prep_plus_trotter(const PauliSum& h, uint32_t width, const TrotterConfig& cfg) {
  if (h.width() != width)
    throw std::invalid_argument("model width " + std::to_string(h.width()) +
                                " does not match requested width " + std::to_string(width));
  return concat(neel_prep(width), trotter_circuit(h, cfg));
}

}  // namespace

BenchRecord run_method1(const PauliSum& h, uint32_t width, const BenchConfig& cfg,
                        const RunContext& ctx) {
  Circuit base = prep_plus_trotter(h, width, cfg.trotter);
  const std::string zeros(width, '0');
  Distribution reference = measure_analytic(run_ideal(base, zeros, cfg.width_cap).state);
  Execution test = execute_test(base, zeros, cfg, derive_seed(ctx.seed, 0));
  double raw = hellinger_fidelity(test.distribution, reference);
  return finalize(ctx, width, MethodId::M1, cfg, base, raw, test.timing);
}

BenchRecord run_method2(const PauliSum& h, uint32_t width, const BenchConfig& cfg,
                        const RunContext& ctx, bool noiseless) {
  if (width > cfg.exact_cap)
    throw std::invalid_argument("Method 2 requires width <= exact cap " +
                                std::to_string(cfg.exact_cap));
  Circuit base = prep_plus_trotter(h, width, cfg.trotter);
  const std::string zeros(width, '0');
  Distribution reference =
      exact_evolution_distribution(h, cfg.trotter.time, neel_bits(width), cfg.exact_cap);

  Execution test;
  if (noiseless || cfg.shots == 0) {
    RunIdealResult res = run_ideal(base, zeros, cfg.width_cap);
    test = {measure_analytic(res.state), res.timing};
  } else {
    RunNoisyResult res =
        run_noisy(base, zeros, cfg.noise, cfg.shots, derive_seed(ctx.seed, 0), cfg.width_cap);
    test = {std::move(res.distribution), res.timing};
  }
  double raw = hellinger_fidelity(test.distribution, reference);
  return finalize(ctx, width, noiseless ? MethodId::M2_noiseless : MethodId::M2, cfg, base, raw,
                  test.timing);
}

BenchRecord run_method3(const PauliSum& h, uint32_t width, const BenchConfig& cfg,
                        const RunContext& ctx, const MirrorVariant& variant) {
  Circuit base = prep_plus_trotter(h, width, cfg.trotter);
  const std::string init = neel_bits(width);

  switch (variant.kind) {
    case MirrorVariant::Kind::simple: {
      Circuit mc = simple_mirror(base);
      Distribution reference = Distribution::point_mass(init);
      Execution test = execute_test(mc, init, cfg, derive_seed(ctx.seed, 0));
      double raw = hellinger_fidelity(test.distribution, reference);
      return finalize(ctx, width, MethodId::M3_simple, cfg, mc, raw, test.timing);
    }
    case MirrorVariant::Kind::random_pauli: {
      PauliString layer = random_pauli_layer(width, derive_seed(ctx.seed, 101));
      auto [mc, frame] = quasi_inverse_mirror(base, layer);
      Distribution reference = expected_mirror_distribution(init, frame);
      Execution test = execute_test(mc, init, cfg, derive_seed(ctx.seed, 0));
      double raw = hellinger_fidelity(test.distribution, reference);
      return finalize(ctx, width, MethodId::M3_random_pauli, cfg, mc, raw, test.timing);
    }
    case MirrorVariant::Kind::multi_random_pauli: {
      if (variant.n_samples < 1)
        throw std::invalid_argument("multi_random_pauli requires n_samples >= 1");
      double raw_sum = 0.0;
      Timing total;
      Circuit first_circuit;
      for (int s = 0; s < variant.n_samples; ++s) {
        PauliString layer =
            random_pauli_layer(width, derive_seed(ctx.seed, 200 + static_cast<uint64_t>(s)));
        auto [mc, frame] = quasi_inverse_mirror(base, layer);
        if (s == 0) first_circuit = mc;
        Distribution reference = expected_mirror_distribution(init, frame);
        Execution test =
            execute_test(mc, init, cfg, derive_seed(ctx.seed, 300 + static_cast<uint64_t>(s)));
        raw_sum += hellinger_fidelity(test.distribution, reference);
        total.elapsed_ns += test.timing.elapsed_ns;
        total.kernel_ns += test.timing.kernel_ns;
      }
      double raw = raw_sum / variant.n_samples;
      return finalize(ctx, width, MethodId::M3_multi_random_pauli, cfg, first_circuit, raw, total);
    }
  }
  throw std::logic_error("invalid mirror variant");
}

BenchRecord run_method1_variant(const PauliSum& h, uint32_t width, const BenchConfig& cfg,
                                const RunContext& ctx, Method1Variant which) {
  TrotterConfig tcfg = cfg.trotter;
  bool invert_block = false;
  MethodId method = MethodId::M1_inverse;
  switch (which) {
    case Method1Variant::inverse:
      invert_block = true;
      method = MethodId::M1_inverse;
      break;
    case Method1Variant::k10_sqrt:
      tcfg.steps *= 2;
      method = MethodId::M1_K10_sqrt;
      break;
    case Method1Variant::k10_inverse_sqrt:
      tcfg.steps *= 2;
      invert_block = true;
      method = MethodId::M1_K10_inverse_sqrt;
      break;
    case Method1Variant::k10_t1e9_sqrt:
      tcfg.steps *= 2;
      tcfg.time = 1e-9;
      method = MethodId::M1_K10_t1e9_sqrt;
      break;
  }

  Circuit block = trotter_circuit(h, tcfg);
  if (invert_block) block = invert(block);
  Circuit circuit = concat(neel_prep(width), block);
  const std::string zeros(width, '0');
  Distribution reference = measure_analytic(run_ideal(circuit, zeros, cfg.width_cap).state);
  Execution test = execute_test(circuit, zeros, cfg, derive_seed(ctx.seed, 0));
  double raw = hellinger_fidelity(test.distribution, reference);
  return finalize(ctx, width, method, cfg, circuit, raw, test.timing);
}

BenchRecord run_cell(const PauliSum& h, uint32_t width, MethodId method, const BenchConfig& cfg,
                     const RunContext& ctx) {
  switch (method) {
    case MethodId::M1: return run_method1(h, width, cfg, ctx);
    case MethodId::M2: return run_method2(h, width, cfg, ctx, false);
    case MethodId::M2_noiseless: return run_method2(h, width, cfg, ctx, true);
    case MethodId::M3_simple:
      return run_method3(h, width, cfg, ctx, {MirrorVariant::Kind::simple, 0});
    case MethodId::M3_random_pauli:
      return run_method3(h, width, cfg, ctx, {MirrorVariant::Kind::random_pauli, 0});
    case MethodId::M3_multi_random_pauli:
      return run_method3(h, width, cfg, ctx,
                         {MirrorVariant::Kind::multi_random_pauli, cfg.n_pauli_samples});
    case MethodId::M1_inverse:
      return run_method1_variant(h, width, cfg, ctx, Method1Variant::inverse);
    case MethodId::M1_K10_sqrt:
      return run_method1_variant(h, width, cfg, ctx, Method1Variant::k10_sqrt);
    case MethodId::M1_K10_inverse_sqrt:
      return run_method1_variant(h, width, cfg, ctx, Method1Variant::k10_inverse_sqrt);
    case MethodId::M1_K10_t1e9_sqrt:
      return run_method1_variant(h, width, cfg, ctx, Method1Variant::k10_t1e9_sqrt);
  }
  throw std::logic_error("invalid MethodId");
}

namespace {

std::set<std::string> load_existing_keys(const std::string& path) {
  std::set<std::string> keys;
  std::ifstream in(path);
  if (!in) return keys;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      ordered_json j = ordered_json::parse(line);
      keys.insert(record_key(j.at("model").get<std::string>(), j.at("params"),
                             j.at("width").get<uint32_t>(), j.at("method").get<std::string>(),
                             j.at("seed").get<uint64_t>()));
    } catch (const std::exception&) {
      // Unparseable lines (e.g. a torn write from an interrupted run) are
      // ignored; the cell will be re-run.
    }
  }
  return keys;
}

}  // namespace

std::vector<BenchRecord> sweep(const BenchConfig& cfg, const std::string& out_path) {
  cfg.validate();
  std::set<std::string> done = load_existing_keys(out_path);
  std::ofstream out(out_path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");

  std::vector<BenchRecord> records;
  for (const ordered_json& params : cfg.model.param_sets) {
    std::vector<uint32_t> widths = cfg.widths;
    if (cfg.model.name == "file") {
      // File models carry their own width.
      PauliSum h = parse_pauli_sum_file(params.at("path").get<std::string>());
      widths = {h.width()};
    }
    for (uint32_t width : widths) {
      for (MethodId method : cfg.methods) {
        const uint64_t seed = cell_seed(cfg, params, width, method);
        const std::string key = record_key(cfg.model.name, params, width, method_name(method), seed);
        if (done.count(key)) continue;

        try {
          PauliSum h = build_model(cfg.model.name, params, width, instance_seed(cfg, params, width));
          RunContext ctx{cfg.model.name, params, seed};
          BenchRecord record = run_cell(h, width, method, cfg, ctx);
          out << record_to_json(record).dump() << "\n" << std::flush;
          records.push_back(std::move(record));
        } catch (const std::exception& e) {
          ordered_json err;
          err["model"] = cfg.model.name;
          err["params"] = params;
          err["width"] = width;
          err["method"] = method_name(method);
          err["seed"] = seed;
          err["error"] = e.what();
          out << err.dump() << "\n" << std::flush;
        }
        done.insert(key);
      }
    }
  }
  return records;
}

std::vector<Aggregate> aggregate_records(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, uint32_t>, std::vector<double>> groups;
  for (const BenchRecord& r : records)
    groups[{method_name(r.method), r.width}].push_back(r.rescaled_fidelity);

  std::vector<Aggregate> out;
  for (const auto& [key, values] : groups) {
    Aggregate a;
    a.method = key.first;
    a.width = key.second;
    a.count = values.size();
    a.min = *std::min_element(values.begin(), values.end());
    a.max = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    a.mean = sum / static_cast<double>(values.size());
    out.push_back(a);
  }
  return out;
}

std::vector<TimingRow> timing_study(const ModelSpec& model, const std::vector<uint32_t>& widths,
                                    uint64_t shots, Backend backend, const TrotterConfig& trotter,
                                    const NoiseModel& noise, uint64_t seed, uint32_t width_cap,
                                    const std::string& out_path) {
  if (model.param_sets.empty()) throw std::invalid_argument("timing_study: no parameter set");
  if (shots < 1) throw std::invalid_argument("timing_study: shots must be >= 1");
  const ordered_json& params = model.param_sets.front();

  std::ofstream out;
  if (!out_path.empty()) {
    out.open(out_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  }

  std::vector<TimingRow> rows;
  for (uint32_t width : widths) {
    if (width > width_cap) {
      std::cerr << "timing_study: dropping width " << width << " beyond cap " << width_cap
                << "\n";
      continue;
    }
    PauliSum h = build_model(model.name, params, width, derive_seed(seed, width));
    Circuit circuit = concat(neel_prep(width), trotter_circuit(h, trotter));
    const std::string zeros(width, '0');

    Timing timing;
    if (backend == Backend::ideal) {
      RunIdealResult res = run_ideal(circuit, zeros, width_cap);
      timing = res.timing;
      sample(res.state, shots, derive_seed(seed, width * 2 + 1), 0.0, timing);
    } else {
      RunNoisyResult res =
          run_noisy(circuit, zeros, noise, shots, derive_seed(seed, width * 2 + 1), width_cap);
      timing = res.timing;
    }

    TimingRow row{model.name, width, shots, backend == Backend::ideal ? "ideal" : "noisy",
                  timing.elapsed_ns, timing.kernel_ns};
    rows.push_back(row);
    if (out.is_open()) {
      ordered_json j;
      j["model"] = row.model;
      j["width"] = row.width;
      j["shots"] = row.shots;
      j["backend"] = row.backend;
      j["elapsed_ns"] = row.elapsed_ns;
      j["kernel_ns"] = row.kernel_ns;
      out << j.dump() << "\n" << std::flush;
    }
  }
  return rows;
}

std::vector<TimingRow> load_timing_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open timing file '" + path + "'");
  std::vector<TimingRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line);
    if (!j.contains("backend")) continue;
    rows.push_back(TimingRow{j.value("model", ""), j.at("width").get<uint32_t>(),
                             j.value("shots", uint64_t{0}), j.at("backend").get<std::string>(),
                             j.at("elapsed_ns").get<uint64_t>(),
                             j.at("kernel_ns").get<uint64_t>()});
  }
  return rows;
}

TimingSeries timing_series(const std::vector<TimingRow>& rows, const std::string& field) {
  if (field != "kernel" && field != "elapsed")
    throw std::invalid_argument("timing_series: field must be 'kernel' or 'elapsed'");
  std::map<uint32_t, std::pair<double, size_t>> acc;
  for (const TimingRow& r : rows) {
    double seconds = 1e-9 * static_cast<double>(field == "kernel" ? r.kernel_ns : r.elapsed_ns);
    auto& slot = acc[r.width];
    slot.first += seconds;
    slot.second += 1;
  }
  TimingSeries series;
  for (const auto& [width, slot] : acc)
    series.emplace_back(width, slot.first / static_cast<double>(slot.second));
  return series;
}

std::vector<BenchRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open records file '" + path + "'");
  std::vector<BenchRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line);
    if (j.contains("error") || !j.contains("method")) continue;  // error or timing rows
    records.push_back(record_from_json(j));
  }
  return records;
}

}  // namespace hamsim
