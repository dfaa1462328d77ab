// Copyright 2026 The spinqft Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "spinqft/circuit.hpp"
#include "spinqft/circuit_json.hpp"
#include "spinqft/cost.hpp"
#include "spinqft/errors.hpp"
#include "spinqft/route.hpp"
#include "spinqft/simulate.hpp"
#include "spinqft/synth.hpp"

namespace py = pybind11;
using namespace spinqft;

namespace {

// Exact values cross the boundary as fractions.Fraction.
py::object to_fraction(const Dyadic& d) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object builtins_int = py::module_::import("builtins").attr("int");
  py::object num = builtins_int(d.mantissa().str());
  py::object den = builtins_int((BigInt(1) << static_cast<unsigned>(d.exponent())).str());
  return fraction(num, den);
}

py::object to_pyint(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

synth::LoweringLevel parse_level(const std::string& s) {
  auto l = synth::level_from_name(s);
  if (!l) throw InvalidArgument("unknown lowering level \"" + s + "\"");
  return *l;
}

synth::XorMode parse_xor_mode(const std::string& s) {
  auto m = synth::xor_mode_from_name(s);
  if (!m) throw InvalidArgument("unknown xor mode \"" + s + "\"");
  return *m;
}

route::RoutingStrategy parse_strategy(const std::string& s) {
  auto r = route::RoutingStrategy::parse(s);
  if (!r) throw InvalidArgument("unknown routing strategy \"" + s + "\"");
  return *r;
}

cost::HardwareModel make_model(const std::string& mode, const std::string& policy, double t_res, double t_ref,
                               double fixed_gate_time) {
  cost::HardwareModel m;
  auto cm = cost::mode_from_name(mode);
  if (!cm) throw InvalidArgument("unknown control mode \"" + mode + "\"");
  auto up = cost::UnitPolicy::parse(policy);
  if (!up) throw InvalidArgument("unknown unit policy \"" + policy + "\"");
  m.mode = *cm;
  m.policy = *up;
  m.t_res = t_res;
  m.t_ref = t_ref;
  m.fixed_gate_time = fixed_gate_time;
  m.validate();
  return m;
}

py::dict census_dict(const ir::Circuit& c) {
  py::dict out;
  const auto census = ir::gate_census(c);
  for (auto k : ir::kAllGateKinds) {
    if (census[k] > 0) out[py::str(std::string(ir::kind_name(k)))] = census[k];
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_spinqft, m) {
  m.doc() = "QFT synthesis, LNN routing and time-cost analysis for nuclear-spin registers";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<IndexError>(m, "QubitIndexError", PyExc_IndexError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ir::Circuit>(m, "Circuit")
      .def_property_readonly("num_qubits", &ir::Circuit::num_qubits)
      .def_property_readonly("stage", [](const ir::Circuit& c) { return std::string(ir::stage_name(c.stage())); })
      .def("__len__", &ir::Circuit::size)
      .def("census", &census_dict, "Gate counts by kind")
      .def("gates", [](const ir::Circuit& c) {
        py::list out;
        for (const auto& g : c) out.append(g.to_string());
        return out;
      })
      .def("to_json", &ir::dump_circuit)
      .def_static("from_json", [](const std::string& s) { return ir::parse_circuit(s); })
      .def("__eq__", [](const ir::Circuit& a, const ir::Circuit& b) { return a == b; })
      .def("__repr__", [](const ir::Circuit& c) {
        return "<Circuit n=" + std::to_string(c.num_qubits()) + " gates=" + std::to_string(c.size()) + " stage=" +
               std::string(ir::stage_name(c.stage())) + ">";
      });

  // synth
  m.def("build_qft", &synth::build_qft, py::arg("n"), py::arg("bit_reversal") = false);
  m.def("build_aqft", &synth::build_aqft, py::arg("n"), py::arg("m"), py::arg("bit_reversal") = false);
  m.def(
      "lower_circuit",
      [](const ir::Circuit& c, const std::string& level, const std::string& xor_mode) {
        return synth::lower_circuit(c, parse_level(level), parse_xor_mode(xor_mode));
      },
      py::arg("circuit"), py::arg("level") = "elementary", py::arg("xor_mode") = "ideal");

  // simulate
  m.def("circuit_unitary", &sim::circuit_unitary, py::arg("circuit"));
  m.def("dft_matrix", &sim::dft_matrix, py::arg("n"));
  m.def(
      "equal_up_to_global_phase",
      [](const sim::UnitaryMatrix& a, const sim::UnitaryMatrix& b, double tol) {
        const auto eq = sim::equal_up_to_global_phase(a, b, tol);
        return py::make_tuple(eq.equal, eq.phase ? py::cast(*eq.phase) : py::none(), eq.residual);
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10,
      "Returns (equal, phase or None, residual).");

  // route
  m.def(
      "route_lnn",
      [](const ir::Circuit& c, const std::string& strategy, bool reduce) {
        auto routed = route::route_lnn(c, parse_strategy(strategy));
        if (reduce) routed = route::cancel_swaps(routed);
        return py::make_tuple(routed.circuit, routed.swap_count);
      },
      py::arg("circuit"), py::arg("strategy") = "target-to-control", py::arg("reduce") = false,
      "Returns (routed circuit, swap count).");
  m.def(
      "swap_overhead_report",
      [](std::size_t n, const std::string& strategy, bool reduce, bool include_bit_reversal) {
        const auto rep = route::swap_overhead_report(n, parse_strategy(strategy), reduce, include_bit_reversal);
        return py::module_::import("json").attr("loads")(route::report_to_json(rep).dump());
      },
      py::arg("n"), py::arg("strategy") = "target-to-control", py::arg("reduce") = true,
      py::arg("include_bit_reversal") = false);

  // cost
  m.def(
      "qft_cost_closed_form",
      [](std::size_t n, const std::string& policy) {
        auto p = cost::UnitPolicy::parse(policy);
        if (!p) throw InvalidArgument("unknown unit policy \"" + policy + "\"");
        return to_fraction(cost::qft_cost_closed_form(n, *p));
      },
      py::arg("n"), py::arg("policy") = "tauN");
  m.def(
      "circuit_cost",
      [](const ir::Circuit& c, const std::string& mode, const std::string& policy, double t_res, double t_ref,
         double fixed_gate_time) {
        const auto r = cost::circuit_cost(c, make_model(mode, policy, t_res, t_ref, fixed_gate_time));
        py::dict out;
        out["total_relative"] = to_fraction(r.total_relative);
        out["total_seconds"] = r.total_seconds;
        out["controlled_rotation"] = to_fraction(r.breakdown.controlled_rotation);
        out["single_qubit_rotation"] = to_fraction(r.breakdown.single_qubit_rotation);
        out["fixed_gates"] = to_fraction(r.breakdown.fixed_gates);
        out["swap"] = to_fraction(r.breakdown.swap);
        out["feasible"] = r.feasible;
        out["n_b"] = r.n_b ? py::cast(*r.n_b) : py::none();
        out["intensity_ratio"] = r.intensity_ratio ? py::cast(*r.intensity_ratio) : py::none();
        return out;
      },
      py::arg("circuit"), py::arg("mode") = "duration", py::arg("policy") = "tauN", py::arg("t_res") = 1e-6,
      py::arg("t_ref") = 1e-6, py::arg("fixed_gate_time") = 0.0);
  m.def(
      "max_feasible_qubits",
      [](double tau0, double t_res) {
        cost::HardwareModel model;
        model.t_res = t_res;
        return cost::max_feasible_qubits(model, tau0);
      },
      py::arg("tau0"), py::arg("t_res"));
  m.def(
      "intensity_requirement",
      [](std::size_t n, double b_min) {
        const auto req = cost::intensity_requirement(n, b_min);
        return py::make_tuple(req.b_max, to_pyint(req.ratio));
      },
      py::arg("n"), py::arg("b_min"), "Returns (B_max in tesla, exact ratio B_max / B_min).");
}
