// Copyright 2026 The gadgetopt Authors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gadgetopt/anneal.hpp"
#include "gadgetopt/ansatz.hpp"
#include "gadgetopt/bit_matrix.hpp"
#include "gadgetopt/circuit.hpp"
#include "gadgetopt/gadget.hpp"
#include "gadgetopt/normal_form.hpp"
#include "gadgetopt/oracle.hpp"
#include "gadgetopt/pipeline.hpp"

namespace py = pybind11;
using namespace gadgetopt;

namespace {

BitMatrix matrix_from_lists(const std::vector<std::vector<int>>& rows) {
  return BitMatrix::from_rows(rows);
}

std::vector<std::vector<int>> matrix_to_lists(const BitMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  }
  return out;
}

GadgetShape parse_shape(const std::string& s) {
  if (s == "tree") return GadgetShape::Tree;
  if (s == "ladder") return GadgetShape::Ladder;
  throw std::invalid_argument("shape must be 'tree' or 'ladder', got '" + s + "'");
}

py::dict metrics_dict(const CircuitMetrics& m) {
  py::dict d;
  d["cnot_count"] = m.cnot_count;
  d["cnot_depth"] = m.cnot_depth;
  d["gate_count"] = m.gate_count;
  return d;
}

py::dict report_dict(const OptimizeReport& r) {
  py::dict d;
  d["before"] = metrics_dict(r.before);
  d["after"] = metrics_dict(r.after);
  d["energy_before"] = r.energy_before;
  d["energy_after"] = r.energy_after;
  d["layers_detected"] = r.layers_detected;
  d["unit_length"] = r.unit_length;
  d["verified"] = std::string(to_string(r.verified));
  d["max_error"] = r.max_error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Phase-gadget circuit optimizer core";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<VerificationFailed> verification_failed(m, "VerificationFailed",
                                                               PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const VerificationFailed& e) {
      py::set_error(verification_failed, e.what());
    }
  });

  m.attr("MAX_ORACLE_QUBITS") = kMaxOracleQubits;

  py::class_<BitMatrix>(m, "BitMatrix")
      .def(py::init(&matrix_from_lists), py::arg("rows"))
      .def_static("identity", &BitMatrix::identity, py::arg("n"))
      .def_property_readonly("rows", &BitMatrix::rows)
      .def_property_readonly("cols", &BitMatrix::cols)
      .def("tolist", &matrix_to_lists)
      .def("__getitem__",
           [](const BitMatrix& a, std::pair<std::size_t, std::size_t> rc) {
             if (rc.first >= a.rows() || rc.second >= a.cols()) throw py::index_error();
             return a.get(rc.first, rc.second) ? 1 : 0;
           })
      .def("__matmul__", &mat_mul)
      .def("__eq__", [](const BitMatrix& a, const BitMatrix& b) { return a == b; })
      .def("__repr__", [](const BitMatrix& a) {
        std::string s = "BitMatrix([";
        for (std::size_t r = 0; r < a.rows(); ++r) {
          s += r ? ", [" : "[";
          for (std::size_t c = 0; c < a.cols(); ++c) {
            s += c ? ", " : "";
            s += a.get(r, c) ? "1" : "0";
          }
          s += "]";
        }
        return s + "])";
      });

  m.def("rank", &rank);
  m.def("invert", &invert);
  m.def("inverse_transpose", &inverse_transpose);
  m.def("mat_pow", &mat_pow, py::arg("a"), py::arg("k"));

  py::class_<GateCircuit>(m, "GateCircuit")
      .def_property_readonly("n_qubits", &GateCircuit::n_qubits)
      .def("__len__", &GateCircuit::size)
      .def("__eq__", [](const GateCircuit& a, const GateCircuit& b) { return a == b; })
      .def("to_text", [](const GateCircuit& c) { return to_text(c); })
      .def_property_readonly("cnot_count", [](const GateCircuit& c) { return cnot_count(c); })
      .def_property_readonly("cnot_depth", [](const GateCircuit& c) { return cnot_depth(c); })
      .def("__repr__", [](const GateCircuit& c) {
        return "<GateCircuit n_qubits=" + std::to_string(c.n_qubits()) +
               " gates=" + std::to_string(c.size()) + ">";
      });

  py::class_<GadgetCircuit>(m, "GadgetCircuit")
      .def_property_readonly("n_qubits", &GadgetCircuit::n_qubits)
      .def("__len__", &GadgetCircuit::size)
      .def("__eq__", [](const GadgetCircuit& a, const GadgetCircuit& b) { return a == b; })
      .def_property_readonly("total_legs", &GadgetCircuit::total_legs)
      .def("to_text", [](const GadgetCircuit& g) { return to_text(g); })
      .def("leg_matrices", [](const GadgetCircuit& g) {
        const LegMatrices l = leg_matrices(g);
        return py::make_tuple(l.lz, l.lx);
      });

  m.def("parse_circuit", &parse_circuit, py::arg("text"));
  m.def("parse_gadgets", &parse_gadgets, py::arg("text"));
  m.def("lower_to_basis", &lower_to_basis, py::arg("circuit"));
  m.def(
      "synth_gadgets",
      [](const GadgetCircuit& g, const std::string& shape) {
        return synth_gadget_circuit(g, parse_shape(shape));
      },
      py::arg("gadgets"), py::arg("shape") = "tree");

  m.def(
      "extract",
      [](const GateCircuit& c) {
        const NormalForm nf = extract(c);
        return py::make_tuple(nf.gadgets, nf.tail.to_gates(), h_z(nf.tail));
      },
      py::arg("circuit"),
      "Returns (gadgets, tail circuit, tail action on Z legs).");
  m.def(
      "extract_text", [](const GateCircuit& c) { return to_text(extract(c)); },
      py::arg("circuit"));

  m.def("energy", &energy, py::arg("c"), py::arg("lz"), py::arg("lx"));
  m.def(
      "anneal",
      [](const BitMatrix& lz, const BitMatrix& lx, std::optional<double> t0,
         std::optional<std::size_t> iterations, std::optional<std::size_t> attempts,
         std::uint64_t seed) {
        AnnealParams p = default_anneal_params(lz, lx, seed);
        if (t0) p.t0 = *t0;
        if (iterations) p.iterations = *iterations;
        if (attempts) p.attempts = *attempts;
        AnnealResult r;
        {
          py::gil_scoped_release release;
          r = anneal(lz, lx, p);
        }
        py::dict d;
        d["best_c"] = r.best_c;
        d["best_energy"] = r.best_energy;
        d["initial_energy"] = r.initial_energy;
        d["per_attempt_energies"] = r.per_attempt_energies;
        return d;
      },
      py::arg("lz"), py::arg("lx"), py::kw_only(), py::arg("t0") = py::none(),
      py::arg("iterations") = py::none(), py::arg("attempts") = py::none(),
      py::arg("seed") = 0);

  m.def(
      "optimize",
      [](const GateCircuit& c, const std::string& shape, bool verify, bool match_angles,
         std::optional<double> t0, std::optional<std::size_t> iterations,
         std::optional<std::size_t> attempts, std::uint64_t seed) {
        OptimizeOptions o;
        o.shape = parse_shape(shape);
        o.verify = verify;
        o.match_angles = match_angles;
        o.t0 = t0;
        o.iterations = iterations;
        o.attempts = attempts;
        o.seed = seed;
        OptimizeResult r;
        {
          py::gil_scoped_release release;
          r = optimize(c, o);
        }
        return py::make_tuple(r.circuit, report_dict(r.report));
      },
      py::arg("circuit"), py::kw_only(), py::arg("shape") = "tree", py::arg("verify") = true,
      py::arg("match_angles") = false, py::arg("t0") = py::none(),
      py::arg("iterations") = py::none(), py::arg("attempts") = py::none(),
      py::arg("seed") = 0,
      "Returns (optimized circuit, report dict).");

  m.def(
      "unitary", [](const GateCircuit& c) { return unitary_of_circuit(c); }, py::arg("circuit"));
  m.def(
      "equivalent",
      [](const GateCircuit& a, const GateCircuit& b, double tol) {
        if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("qubit counts differ");
        return equiv_up_to_phase(unitary_of_circuit(a), unitary_of_circuit(b), tol);
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

  m.def(
      "generate",
      [](const std::string& kind, std::size_t n_qubits, std::size_t layers,
         std::size_t gadgets_per_layer, std::uint64_t seed, bool with_rx) -> py::object {
        AnsatzSpec spec;
        spec.kind = parse_ansatz_kind(kind);
        spec.n_qubits = n_qubits;
        spec.layers = layers;
        spec.gadgets_per_layer = gadgets_per_layer;
        spec.seed = seed;
        spec.with_rx = with_rx;
        return std::visit([](auto&& a) { return py::cast(a); }, generate(spec));
      },
      py::arg("kind"), py::arg("n_qubits") = 4, py::arg("layers") = 1,
      py::arg("gadgets_per_layer") = 10, py::arg("seed") = 0, py::arg("with_rx") = false);
}
