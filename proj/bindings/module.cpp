#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamsim/bench.hpp"
#include "hamsim/clifford.hpp"
#include "hamsim/exact.hpp"
#include "hamsim/metrics.hpp"
#include "hamsim/mirror.hpp"
#include "hamsim/models.hpp"
#include "hamsim/pauli.hpp"
#include "hamsim/report.hpp"
#include "hamsim/simulator.hpp"
#include "hamsim/trotter.hpp"

namespace py = pybind11;
using namespace hamsim;

namespace {

py::object json_to_py(const ordered_json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

ordered_json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    ordered_json j = ordered_json::object();
    for (auto item : obj.cast<py::dict>())
      j[item.first.cast<std::string>()] = py_to_json(item.second);
    return j;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    ordered_json j = ordered_json::array();
    for (auto item : obj.cast<py::sequence>()) j.push_back(py_to_json(item));
    return j;
  }
  throw py::type_error("unsupported parameter value type");
}

py::dict distribution_to_dict(const Distribution& d) {
  py::dict out;
  for (const auto& [index, value] : d.entries)
    out[py::str(index_to_bits(index, d.width))] = value;
  return out;
}

Distribution distribution_from_dict(const py::dict& entries, uint64_t shots) {
  Distribution d;
  d.shots = shots;
  for (auto item : entries) {
    std::string bits = item.first.cast<std::string>();
    if (d.width == 0) d.width = static_cast<uint32_t>(bits.size());
    d.entries[bits_to_index(bits)] = item.second.cast<double>();
  }
  return d;
}

BoundaryCondition bc_from_flag(bool periodic) {
  return periodic ? BoundaryCondition::periodic : BoundaryCondition::open;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Trotterized Hamiltonian simulation benchmark core";

  // --- Pauli algebra ---------------------------------------------------
  py::class_<PauliString>(m, "PauliString")
      .def(py::init([](const std::string& s) { return PauliString::from_string(s); }))
      .def_property_readonly("width", &PauliString::width)
      .def("weight", &PauliString::weight)
      .def("is_identity", &PauliString::is_identity)
      .def("__str__", &PauliString::to_string)
      .def("__repr__",
           [](const PauliString& p) { return "PauliString('" + p.to_string() + "')"; })
      .def("__eq__", [](const PauliString& a, const PauliString& b) { return a == b; });

  py::class_<PauliSum>(m, "PauliSum")
      .def_property_readonly("width", &PauliSum::width)
      .def("__len__", &PauliSum::size)
      .def("terms",
           [](const PauliSum& sum) {
             py::list out;
             for (const auto& t : sum.terms())
               out.append(py::make_tuple(t.coeff, t.string.to_string()));
             return out;
           })
      .def("__repr__", [](const PauliSum& sum) {
        return "PauliSum(width=" + std::to_string(sum.width()) +
               ", terms=" + std::to_string(sum.size()) + ")";
      });

  m.def("parse_pauli_sum", [](const std::string& text) { return parse_pauli_sum(text); });
  m.def("parse_pauli_sum_file", &parse_pauli_sum_file);
  m.def("to_text", &to_text);
  m.def("commutes", [](const std::string& a, const std::string& b) {
    return commutes(PauliString::from_string(a), PauliString::from_string(b));
  });
  m.def("all_terms_commute", &all_terms_commute);

  // --- Circuits ---------------------------------------------------------
  py::class_<Gate>(m, "Gate")
      .def_static("h", &Gate::h)
      .def_static("x", &Gate::x)
      .def_static("y", &Gate::y)
      .def_static("z", &Gate::z)
      .def_static("s", &Gate::s)
      .def_static("sdg", &Gate::sdg)
      .def_static("rx", &Gate::rx)
      .def_static("ry", &Gate::ry)
      .def_static("rz", &Gate::rz)
      .def_static("cx", &Gate::cx)
      .def_readonly("angle", &Gate::angle)
      .def("__repr__", [](const Gate& g) {
        std::string r = std::string("Gate(") + gate_kind_name(g.kind) + ", " + std::to_string(g.q0);
        if (g.kind == GateKind::CX) r += ", " + std::to_string(g.q1);
        if (g.is_rotation()) r += ", angle=" + std::to_string(g.angle);
        return r + ")";
      });

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<uint32_t, std::string>(), py::arg("width"), py::arg("label") = "")
      .def_readonly("width", &Circuit::width)
      .def_readwrite("label", &Circuit::label)
      .def("append", &Circuit::append)
      .def("__len__", &Circuit::size)
      .def("debug_text", &to_debug_text)
      .def("__repr__", [](const Circuit& c) {
        return "Circuit(width=" + std::to_string(c.width) +
               ", gates=" + std::to_string(c.gates.size()) + ")";
      });

  py::class_<DepthMetrics>(m, "DepthMetrics")
      .def_readonly("layered_depth", &DepthMetrics::layered_depth)
      .def_readonly("gate_count", &DepthMetrics::gate_count)
      .def_readonly("two_qubit_count", &DepthMetrics::two_qubit_count)
      .def("__repr__", [](const DepthMetrics& d) {
        return "DepthMetrics(layered_depth=" + std::to_string(d.layered_depth) +
               ", gate_count=" + std::to_string(d.gate_count) +
               ", two_qubit_count=" + std::to_string(d.two_qubit_count) + ")";
      });

  m.def("invert", &invert);
  m.def("concat", &concat);
  m.def("depth_metrics", &depth_metrics);
  m.def("conjugate_by_clifford", [](const std::string& p, const Gate& g) {
    CliffordImage img = conjugate_by_clifford(PauliString::from_string(p), g);
    return py::make_tuple(img.string.to_string(), img.sign);
  });

  // --- Models -----------------------------------------------------------
  m.def(
      "tfim",
      [](uint32_t n, double h, bool periodic) { return tfim(n, h, bc_from_flag(periodic)); },
      py::arg("n"), py::arg("h") = 1.0, py::arg("periodic") = false);
  m.def(
      "heisenberg",
      [](uint32_t n, double h, bool periodic) { return heisenberg(n, h, bc_from_flag(periodic)); },
      py::arg("n"), py::arg("h") = 1.0, py::arg("periodic") = false);
  m.def(
      "max3sat",
      [](uint32_t n, double ratio, uint64_t seed) {
        auto [sum, inst] = max3sat(n, ratio, seed);
        py::list clauses;
        for (const auto& clause : inst.clauses) {
          py::list lits;
          for (const auto& lit : clause.literals)
            lits.append(py::make_tuple(lit.var, lit.negated));
          clauses.append(lits);
        }
        return py::make_tuple(sum, clauses);
      },
      py::arg("n"), py::arg("ratio"), py::arg("seed"));
  m.def(
      "fermi_hubbard_1d_jw",
      [](uint32_t n_sites, double t, double u, bool periodic) {
        return fermi_hubbard_1d_jw(n_sites, t, u, bc_from_flag(periodic));
      },
      py::arg("n_sites"), py::arg("t") = 1.0, py::arg("u") = 4.0, py::arg("periodic") = false);

  // --- Trotterization and mirrors ----------------------------------------
  m.def("neel_prep", &neel_prep);
  m.def("neel_bits", &neel_bits);
  m.def(
      "trotter_circuit",
      [](const PauliSum& h, double time, int steps) {
        return trotter_circuit(h, TrotterConfig{time, steps});
      },
      py::arg("h"), py::arg("time") = 1.0, py::arg("steps") = 5);
  m.def(
      "pauli_exponential",
      [](double coeff, const std::string& s, double angle_scale) {
        PauliString ps = PauliString::from_string(s);
        return pauli_exponential(PauliTerm{coeff, ps}, angle_scale, ps.width());
      },
      py::arg("coeff"), py::arg("pauli"), py::arg("angle_scale"));
  m.def("simple_mirror", &simple_mirror);
  m.def("quasi_inverse_mirror", [](const Circuit& c, const std::string& p) {
    auto [mc, frame] = quasi_inverse_mirror(c, PauliString::from_string(p));
    return py::make_tuple(mc, frame.current.to_string(), frame.sign);
  });
  m.def("expected_mirror_distribution",
        [](const std::string& bits, const std::string& resultant, int sign) {
          PauliFrame frame{PauliString::from_string(resultant), sign};
          return distribution_to_dict(expected_mirror_distribution(bits, frame));
        },
        py::arg("initial_bits"), py::arg("resultant"), py::arg("sign") = 1);
  m.def(
      "random_pauli_layer",
      [](uint32_t width, uint64_t seed) { return random_pauli_layer(width, seed).to_string(); },
      py::arg("width"), py::arg("seed"));

  // --- Simulator ----------------------------------------------------------
  py::class_<NoiseModel>(m, "NoiseModel")
      .def(py::init([](double p1, double p2, double p_ro) {
             NoiseModel n{p1, p2, p_ro};
             n.validate();
             return n;
           }),
           py::arg("p1") = 3e-4, py::arg("p2") = 3e-3, py::arg("p_ro") = 1e-2)
      .def_readwrite("p1", &NoiseModel::p1)
      .def_readwrite("p2", &NoiseModel::p2)
      .def_readwrite("p_ro", &NoiseModel::p_ro);

  py::class_<Timing>(m, "Timing")
      .def_readonly("elapsed_ns", &Timing::elapsed_ns)
      .def_readonly("kernel_ns", &Timing::kernel_ns);

  m.def(
      "run_ideal",
      [](const Circuit& c, const std::string& bits) {
        RunIdealResult res = run_ideal(c, bits);
        return py::make_tuple(res.state.amplitudes(), res.timing);
      },
      py::arg("circuit"), py::arg("initial_bits"));
  m.def(
      "run_ideal_distribution",
      [](const Circuit& c, const std::string& bits) {
        return distribution_to_dict(measure_analytic(run_ideal(c, bits).state));
      },
      py::arg("circuit"), py::arg("initial_bits"));
  m.def(
      "run_noisy",
      [](const Circuit& c, const std::string& bits, const NoiseModel& noise, uint64_t shots,
         uint64_t seed) {
        RunNoisyResult res = run_noisy(c, bits, noise, shots, seed);
        return py::make_tuple(distribution_to_dict(res.distribution), res.timing);
      },
      py::arg("circuit"), py::arg("initial_bits"), py::arg("noise"), py::arg("shots"),
      py::arg("seed"));

  // --- Exact oracle -------------------------------------------------------
  m.def("hamiltonian_matrix", [](const PauliSum& h) { return hamiltonian_matrix(h); });
  m.def("circuit_unitary", [](const Circuit& c) { return circuit_unitary(c); });
  m.def(
      "exact_evolution_distribution",
      [](const PauliSum& h, double t, const std::string& bits) {
        return distribution_to_dict(exact_evolution_distribution(h, t, bits));
      },
      py::arg("h"), py::arg("t"), py::arg("initial_bits"));

  // --- Metrics --------------------------------------------------------------
  m.def(
      "hellinger_fidelity",
      [](const py::dict& p, const py::dict& q, uint64_t p_shots, uint64_t q_shots) {
        return hellinger_fidelity(distribution_from_dict(p, p_shots),
                                  distribution_from_dict(q, q_shots));
      },
      py::arg("p"), py::arg("q"), py::arg("p_shots") = 0, py::arg("q_shots") = 0);
  m.def("polarization", &polarization);
  m.def("mirror_rescale", &mirror_rescale);
  m.def("crossover_width",
        [](const TimingSeries& a, const TimingSeries& b) -> py::object {
          auto w = crossover_width(a, b);
          if (!w) return py::none();
          return py::int_(*w);
        });

  // --- Benchmark runner --------------------------------------------------
  m.def(
      "run_benchmark",
      [](const std::string& model, const py::dict& params, uint32_t width,
         const std::string& method, uint64_t shots, int steps, double time,
         const NoiseModel& noise, uint64_t seed, int pauli_samples) {
        auto mid = method_from_name(method);
        if (!mid) throw std::invalid_argument("unknown method '" + method + "'");
        BenchConfig cfg;
        cfg.model.name = model;
        ordered_json p = py_to_json(params);
        cfg.model.param_sets.push_back(p);
        cfg.widths = {width};
        cfg.trotter = TrotterConfig{time, steps};
        cfg.shots = shots;
        cfg.noise = noise;
        cfg.methods = {*mid};
        cfg.seed = seed;
        cfg.n_pauli_samples = pauli_samples;
        PauliSum h = build_model(model, p, width, instance_seed(cfg, p, width));
        RunContext ctx{model, p, cell_seed(cfg, p, width, *mid)};
        return json_to_py(record_to_json(run_cell(h, width, *mid, cfg, ctx)));
      },
      py::arg("model"), py::arg("params"), py::arg("width"), py::arg("method"),
      py::arg("shots") = 1000, py::arg("steps") = 5, py::arg("time") = 1.0,
      py::arg("noise") = NoiseModel{}, py::arg("seed") = 1, py::arg("pauli_samples") = 10);
}
