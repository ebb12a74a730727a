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

#include <cmath>
#include <complex>

#include "gadgetopt/angles.hpp"
#include "gadgetopt/circuit.hpp"

namespace gadgetopt {

namespace {

// Two-legged Z gadget exp(-i(theta/2) Z_a Z_b) as a CNOT ladder.
void zz_gadget(std::vector<Gate>& out, double theta, Qubit a, Qubit b) {
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::rz(theta, b));
  out.push_back(Gate::cnot(a, b));
}

void hadamard(std::vector<Gate>& out, Qubit q) {
  out.push_back(Gate::rz(kPi / 2, q));
  out.push_back(Gate::rx(kPi / 2, q));
  out.push_back(Gate::rz(kPi / 2, q));
}

// diag(1, 1, 1, e^{i theta}) = exp(i theta/4 (-Z_a - Z_b + Z_a Z_b)) up to phase.
void controlled_phase(std::vector<Gate>& out, double theta, Qubit a, Qubit b) {
  out.push_back(Gate::rz(theta / 2, a));
  out.push_back(Gate::rz(theta / 2, b));
  zz_gadget(out, -theta / 2, a, b);
}

// diag(1, 1, e^{-i theta/2}, e^{i theta/2}) = exp(-i theta/4 (1 - Z_c) Z_t).
void controlled_rz(std::vector<Gate>& out, double theta, Qubit c, Qubit t) {
  out.push_back(Gate::rz(theta / 2, t));
  zz_gadget(out, -theta / 2, c, t);
}

}  // namespace

std::vector<Gate> lower_gate(const Gate& g) {
  std::vector<Gate> out;
  switch (g.kind) {
    case GateKind::CNOT:
    case GateKind::RZ:
    case GateKind::RX:
      out.push_back(g);
      break;
    case GateKind::RY:
      // Ry(t) = S Rx(t) S^dagger
      out.push_back(Gate::rz(-kPi / 2, g.qubit()));
      out.push_back(Gate::rx(g.angle, g.qubit()));
      out.push_back(Gate::rz(kPi / 2, g.qubit()));
      break;
    case GateKind::H:
      hadamard(out, g.qubit());
      break;
    case GateKind::CZ:
      controlled_phase(out, kPi, g.qubits[0], g.qubits[1]);
      break;
    case GateKind::CU1:
      controlled_phase(out, g.angle, g.qubits[0], g.qubits[1]);
      break;
    case GateKind::CRZ:
      controlled_rz(out, g.angle, g.control(), g.target());
      break;
    case GateKind::CRX:
      hadamard(out, g.target());
      controlled_rz(out, g.angle, g.control(), g.target());
      hadamard(out, g.target());
      break;
  }
  return out;
}

GateCircuit lower_to_basis(const GateCircuit& circuit) {
  GateCircuit out(circuit.n_qubits());
  for (const auto& g : circuit.gates()) {
    for (const auto& lowered : lower_gate(g)) out.add(lowered);
  }
  return out;
}

namespace {
double arg_or_zero(std::complex<double> z) { return std::abs(z) == 0.0 ? 0.0 : std::arg(z); }
}  // namespace

EulerAngles euler_xzx_to_zxz(double a1, double a2, double a3) {
  using namespace std::complex_literals;
  const double c2 = std::cos(a2 / 2);
  const double s2 = std::sin(a2 / 2);
  const std::complex<double> z1 = c2 * std::cos((a1 + a3) / 2) + 1i * s2 * std::cos((a1 - a3) / 2);
  const std::complex<double> z2 = c2 * std::sin((a1 + a3) / 2) - 1i * s2 * std::sin((a1 - a3) / 2);
  const double arg1 = arg_or_zero(z1);
  const double arg2 = arg_or_zero(z2);
  // The half-angle of b2 is atan(|z2| / |z1|).
  const double b2 = 2.0 * std::atan2(std::abs(z2), std::abs(z1));
  return {normalize_angle(arg1 + arg2), normalize_angle(b2), normalize_angle(arg1 - arg2)};
}

}  // namespace gadgetopt
