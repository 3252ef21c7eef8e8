#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamsim/bench.hpp"
#include "hamsim/metrics.hpp"
#include "hamsim/report.hpp"

namespace {

using hamsim::ordered_json;

std::vector<uint32_t> parse_width_range(const std::string& spec) {
  // "a", "a:b" (step 1) or "a:b:step"
  std::vector<long> parts;
  std::string cur;
  for (char c : spec + ":") {
    if (c == ':') {
      if (cur.empty()) throw CLI::ValidationError("--widths", "empty field in '" + spec + "'");
      parts.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (parts.empty() || parts.size() > 3)
    throw CLI::ValidationError("--widths", "expected a, a:b or a:b:step");
  long a = parts[0];
  long b = parts.size() > 1 ? parts[1] : a;
  long step = parts.size() > 2 ? parts[2] : 1;
  if (a < 1 || b < a || step < 1)
    throw CLI::ValidationError("--widths", "need 1 <= a <= b and step >= 1");
  std::vector<uint32_t> widths;
  for (long w = a; w <= b; w += step) widths.push_back(static_cast<uint32_t>(w));
  return widths;
}

std::vector<hamsim::MethodId> parse_methods(const std::vector<std::string>& names) {
  std::vector<hamsim::MethodId> methods;
  for (const std::string& name : names) {
    auto m = hamsim::method_from_name(name);
    if (!m) throw CLI::ValidationError("--methods", "unknown method '" + name + "'");
    methods.push_back(*m);
  }
  return methods;
}

struct ModelFlags {
  std::string model = "tfim";
  std::vector<double> h = {1.0};
  bool pbc = false;
  std::vector<double> ratio = {3.0};
  double t_hop = 1.0;
  std::vector<double> u = {4.0};
};

hamsim::ModelSpec make_model_spec(const ModelFlags& f) {
  hamsim::ModelSpec spec;
  if (f.model.rfind("file:", 0) == 0) {
    spec.name = "file";
    ordered_json p;
    p["path"] = f.model.substr(5);
    spec.param_sets.push_back(p);
    return spec;
  }
  spec.name = f.model;
  if (f.model == "tfim" || f.model == "heisenberg") {
    for (double h : f.h) {
      ordered_json p;
      p["h"] = h;
      p["periodic"] = f.pbc;
      spec.param_sets.push_back(p);
    }
  } else if (f.model == "max3sat") {
    for (double r : f.ratio) {
      ordered_json p;
      p["ratio"] = r;
      spec.param_sets.push_back(p);
    }
  } else if (f.model == "fh1d") {
    for (double u : f.u) {
      ordered_json p;
      p["t_hop"] = f.t_hop;
      p["u"] = u;
      p["periodic"] = f.pbc;
      spec.param_sets.push_back(p);
    }
  } else {
    throw CLI::ValidationError("--model", "unknown model '" + f.model + "'");
  }
  return spec;
}

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
  // Help stays on --help so the field-strength flag can be named --h.
  cmd->set_help_flag("--help", "print help");
  cmd->add_option("--model", f.model, "tfim|heisenberg|max3sat|fh1d|file:<path>")
      ->default_val("tfim");
  cmd->add_option("--h", f.h, "field strength(s), comma separated")->delimiter(',');
  cmd->add_flag("--pbc", f.pbc, "periodic boundary conditions");
  cmd->add_option("--ratio", f.ratio, "Max3SAT clause ratio(s)")->delimiter(',');
  cmd->add_option("--t-hop", f.t_hop, "Fermi-Hubbard hopping amplitude");
  cmd->add_option("--U", f.u, "Fermi-Hubbard interaction strength(s)")->delimiter(',');
}

int run_command(const ModelFlags& model_flags, const std::string& widths_spec,
                const std::vector<std::string>& method_names, int steps, double time,
                uint64_t shots, const hamsim::NoiseModel& noise, uint64_t seed,
                int pauli_samples, const std::string& out) {
  hamsim::BenchConfig cfg;
  cfg.model = make_model_spec(model_flags);
  cfg.widths = parse_width_range(widths_spec);
  cfg.trotter.steps = steps;
  cfg.trotter.time = time;
  cfg.shots = shots;
  cfg.noise = noise;
  cfg.methods = parse_methods(method_names);
  cfg.seed = seed;
  cfg.n_pauli_samples = pauli_samples;

  auto records = hamsim::sweep(cfg, out);
  std::cout << "wrote " << records.size() << " new record(s) to " << out << "\n";
  for (const auto& agg : hamsim::aggregate_records(records))
    std::printf("  %-22s width %2u  n=%zu  min/mean/max = %.4f / %.4f / %.4f\n",
                agg.method.c_str(), agg.width, agg.count, agg.min, agg.mean, agg.max);
  return 0;
}

int report_command(const std::string& in, const std::string& csv, const std::string& svg) {
  auto records = hamsim::load_records(in);
  std::vector<hamsim::TimingRow> timing_rows;
  try {
    timing_rows = hamsim::load_timing_rows(in);
  } catch (const std::exception&) {
  }
  if (records.empty() && timing_rows.empty())
    throw std::runtime_error("no records found in '" + in + "'");

  if (!csv.empty()) {
    hamsim::write_records_csv(records, csv);
    std::cout << "wrote " << records.size() << " record(s) to " << csv << "\n";
  }
  if (!svg.empty()) {
    if (!records.empty()) {
      hamsim::write_fidelity_svg(records, svg + "_fidelity.svg");
      hamsim::write_depth_svg(records, svg + "_depth.svg");
      std::cout << "wrote " << svg << "_fidelity.svg and " << svg << "_depth.svg\n";
    }
    if (!timing_rows.empty()) {
      hamsim::write_timing_svg(timing_rows, svg + "_timing.svg");
      std::cout << "wrote " << svg << "_timing.svg\n";
    }
  }
  return 0;
}

int timing_command(const ModelFlags& model_flags, const std::string& widths_spec, uint64_t shots,
                   const std::string& backend, int steps, double time, uint64_t seed,
                   const std::string& out) {
  hamsim::TrotterConfig trotter{time, steps};
  hamsim::NoiseModel noise;
  auto rows = hamsim::timing_study(make_model_spec(model_flags), parse_width_range(widths_spec),
                                   shots, backend == "noisy" ? hamsim::Backend::noisy
                                                             : hamsim::Backend::ideal,
                                   trotter, noise, seed, hamsim::kDefaultWidthCap, out);
  std::cout << "wrote " << rows.size() << " timing row(s) to " << out << "\n";
  for (const auto& r : rows)
    std::printf("  width %2u  kernel %.4fs  elapsed %.4fs\n", r.width,
                1e-9 * static_cast<double>(r.kernel_ns), 1e-9 * static_cast<double>(r.elapsed_ns));
  return 0;
}

int crossover_command(const std::string& a_path, const std::string& b_path,
                      const std::string& field) {
  auto a = hamsim::timing_series(hamsim::load_timing_rows(a_path), field);
  auto b = hamsim::timing_series(hamsim::load_timing_rows(b_path), field);
  auto w = hamsim::crossover_width(a, b);
  if (w)
    std::cout << "crossover at width " << *w << "\n";
  else
    std::cout << "no crossover\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trotterized Hamiltonian simulation benchmark harness"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run a fidelity benchmark sweep");
  ModelFlags run_model;
  add_model_flags(run, run_model);
  std::string widths = "2:10:2";
  std::vector<std::string> methods = {"M1"};
  int steps = 5;
  double time = 1.0;
  uint64_t shots = 1000;
  hamsim::NoiseModel noise;
  uint64_t seed = 1;
  int pauli_samples = 10;
  std::string out = "records.jsonl";
  run->add_option("--widths", widths, "width grid a:b:step")->default_val("2:10:2");
  run->add_option("--methods", methods, "comma-separated method list")->delimiter(',');
  run->add_option("--steps", steps, "Trotter steps K");
  run->add_option("--time", time, "evolution time t");
  run->add_option("--shots", shots, "shots per execution (0 = analytic)");
  run->add_option("--noise-p1", noise.p1, "per-1q-gate depolarizing probability");
  run->add_option("--noise-p2", noise.p2, "per-CX depolarizing probability");
  run->add_option("--noise-ro", noise.p_ro, "per-bit readout flip probability");
  run->add_option("--seed", seed, "base RNG seed");
  run->add_option("--pauli-samples", pauli_samples, "samples for M3_multi_random_pauli");
  run->add_option("--out", out, "output JSONL path");

  // report
  auto* report = app.add_subcommand("report", "render records to CSV/SVG");
  std::string rep_in, rep_csv, rep_svg;
  report->add_option("--in", rep_in, "input JSONL path")->required();
  report->add_option("--csv", rep_csv, "CSV output path");
  report->add_option("--svg", rep_svg, "SVG output prefix");

  // timing
  auto* timing = app.add_subcommand("timing", "measure execution time vs width");
  ModelFlags timing_model;
  add_model_flags(timing, timing_model);
  std::string t_widths = "4:22:2";
  uint64_t t_shots = 10000;
  std::string backend = "ideal";
  int t_steps = 5;
  double t_time = 1.0;
  uint64_t t_seed = 1;
  std::string t_out = "timing.jsonl";
  timing->add_option("--widths", t_widths, "width grid a:b:step");
  timing->add_option("--shots", t_shots, "shots per width");
  timing->add_option("--backend", backend, "ideal|noisy")
      ->check(CLI::IsMember({"ideal", "noisy"}));
  timing->add_option("--steps", t_steps, "Trotter steps K");
  timing->add_option("--time", t_time, "evolution time t");
  timing->add_option("--seed", t_seed, "base RNG seed");
  timing->add_option("--out", t_out, "output JSONL path");

  // crossover
  auto* crossover = app.add_subcommand("crossover", "first width where series a exceeds series b");
  std::string a_path, b_path, field = "kernel";
  crossover->add_option("--a", a_path, "timing JSONL for series a")->required();
  crossover->add_option("--b", b_path, "timing JSONL for series b")->required();
  crossover->add_option("--field", field, "kernel|elapsed")
      ->check(CLI::IsMember({"kernel", "elapsed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed())
      return run_command(run_model, widths, methods, steps, time, shots, noise, seed,
                         pauli_samples, out);
    if (report->parsed()) return report_command(rep_in, rep_csv, rep_svg);
    if (timing->parsed())
      return timing_command(timing_model, t_widths, t_shots, backend, t_steps, t_time, t_seed,
                            t_out);
    if (crossover->parsed()) return crossover_command(a_path, b_path, field);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
