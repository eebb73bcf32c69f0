// Copyright 2026 The vtqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "vtqg/errors.hpp"
#include "vtqg/harness.hpp"
#include "vtqg/qpd.hpp"
#include "vtqg/routing.hpp"
#include "vtqg/text_format.hpp"
#include "vtqg/tfim.hpp"

namespace py = pybind11;

namespace {

using namespace vtqg;

ExperimentConfig parse_config(const std::string& config_json) {
  return config_from_json(config_json.empty() ? nlohmann::json::object()
                                              : nlohmann::json::parse(config_json));
}

py::dict record_dict(const ResultRecord& r) {
  py::dict d;
  d["variant"] = std::string(to_string(r.variant));
  d["n_qubits"] = r.n_qubits;
  d["repetition"] = r.repetition;
  d["mag"] = r.mag;
  d["sx"] = r.sx;
  d["sy"] = r.sy;
  d["sz"] = r.sz;
  d["ideal"] = r.ideal;
  d["fragments"] = r.fragments;
  d["two_qubit_gates"] = r.two_qubit_gates;
  d["wall_ms"] = r.wall_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_vtqg, m) {
  m.doc() = "Virtual two-qubit gate decomposition and TFIM experiments";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InvalidCircuit>(m, "InvalidCircuit", PyExc_ValueError);
  py::register_exception<UnsupportedTopology>(m, "UnsupportedTopology", PyExc_ValueError);
  py::register_exception<UnsupportedOperation>(m, "UnsupportedOperation", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  m.def("decompose_vrzz", [](double theta) {
    py::list out;
    for (const QpdTerm& t : decompose_vrzz(theta)) {
      py::dict d;
      d["coefficient"] = t.coefficient;
      d["family"] = std::string(to_string(t.family));
      d["op_a"] = to_string(t.op_a);
      d["op_b"] = to_string(t.op_b);
      d["alpha_a"] = t.alpha_a;
      d["alpha_b"] = t.alpha_b;
      out.append(d);
    }
    return out;
  }, py::arg("theta"), "Ten signed terms of the virtual RZZ decomposition.");

  m.def("gamma", &vtqg::gamma, py::arg("theta"), "Sampling overhead 1 + 2|sin theta|.");

  m.def("grouped_weights", [](double theta) {
    std::vector<double> w;
    for (const auto& g : group_for_sampling(decompose_vrzz(theta))) w.push_back(g.weight);
    return w;
  }, py::arg("theta"));

  m.def("swap_count", [](std::size_t n) {
    return route_ring_closure(n, CouplingMap::path(n)).swap_count;
  }, py::arg("n_qubits"), "SWAPs needed to close the ring on a linear chain.");

  m.def("exact_reference", [](std::size_t n, double h, double J, double dt, std::size_t steps) {
    TfimParams p{n, h, J, dt, steps};
    return exact_reference(p);
  }, py::arg("n_qubits") = 8, py::arg("h") = 0.786, py::arg("J") = 0.787,
     py::arg("dt") = 0.5, py::arg("n_steps") = 1);

  m.def("normalize_circuit", [](const std::string& text) {
    return to_text(parse_circuit(text));
  }, py::arg("text"), "Parses circuit text and prints it back in canonical form.");

  m.def("run_experiment", [](const std::string& config_json) {
    const auto records = run_experiment(parse_config(config_json));
    py::list out;
    for (const auto& r : records) out.append(record_dict(r));
    return out;
  }, py::arg("config_json") = "", "Runs an experiment described by a JSON string.");

  m.def("results_csv", [](const std::string& config_json) {
    std::ostringstream os;
    write_csv(os, run_experiment(parse_config(config_json)));
    return os.str();
  }, py::arg("config_json") = "");

  m.attr("__version__") = "0.1.0";
}
