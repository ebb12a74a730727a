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

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gadgetopt {

using Qubit = std::size_t;

enum class GateKind { CNOT, RZ, RX, RY, H, CZ, CRZ, CRX, CU1 };

std::string_view gate_keyword(GateKind kind);
bool is_two_qubit(GateKind kind);
bool is_parameterised(GateKind kind);

/**
 * A primitive gate. Angles are radians; qubits[1] is unused by single-qubit
 * kinds. For controlled kinds qubits[0] is the control.
 */
struct Gate {
  GateKind kind = GateKind::RZ;
  double angle = 0.0;
  std::array<Qubit, 2> qubits{};

  static Gate cnot(Qubit control, Qubit target) { return {GateKind::CNOT, 0.0, {control, target}}; }
  static Gate rz(double angle, Qubit q) { return {GateKind::RZ, angle, {q, 0}}; }
  static Gate rx(double angle, Qubit q) { return {GateKind::RX, angle, {q, 0}}; }
  static Gate ry(double angle, Qubit q) { return {GateKind::RY, angle, {q, 0}}; }
  static Gate h(Qubit q) { return {GateKind::H, 0.0, {q, 0}}; }
  static Gate cz(Qubit a, Qubit b) { return {GateKind::CZ, 0.0, {a, b}}; }
  static Gate crz(double angle, Qubit control, Qubit target) {
    return {GateKind::CRZ, angle, {control, target}};
  }
  static Gate crx(double angle, Qubit control, Qubit target) {
    return {GateKind::CRX, angle, {control, target}};
  }
  static Gate cu1(double angle, Qubit a, Qubit b) { return {GateKind::CU1, angle, {a, b}}; }

  std::size_t arity() const { return is_two_qubit(kind) ? 2 : 1; }
  Qubit control() const { return qubits[0]; }
  Qubit target() const { return qubits[1]; }
  Qubit qubit() const { return qubits[0]; }

  friend bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.angle == b.angle && a.qubits[0] == b.qubits[0] &&
           (a.arity() == 1 || a.qubits[1] == b.qubits[1]);
  }
};

/** Ordered gate list on a fixed number of qubits. add() validates indices. */
class GateCircuit {
 public:
  GateCircuit() = default;
  explicit GateCircuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  GateCircuit& add(const Gate& gate);
  GateCircuit& append(const GateCircuit& other);

  friend bool operator==(const GateCircuit&, const GateCircuit&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Reads the line-oriented circuit format:
 *
 *   qubits <n>
 *   cnot <control> <target>
 *   rz|rx|ry <angle> <q>
 *   h <q>
 *   cz <a> <b>
 *   crz|crx <angle> <control> <target>
 *   cu1 <angle> <a> <b>
 *
 * Keywords are case-insensitive and '#' starts a comment.
 */
GateCircuit parse_circuit(std::string_view text);
std::string to_text(const GateCircuit& circuit);

/** Shortest decimal that round-trips to the same double. */
std::string format_angle(double angle);

std::size_t cnot_count(const GateCircuit& circuit);
/**
 * Depth of the ASAP schedule counting only layers that hold a CNOT. Every gate
 * occupies its qubits' slots, so single-qubit gates still push CNOTs later.
 */
std::size_t cnot_depth(const GateCircuit& circuit);
bool is_basis_circuit(const GateCircuit& circuit);

/** Rewrites every gate into {CNOT, RZ, RX}; equal up to global phase. */
GateCircuit lower_to_basis(const GateCircuit& circuit);
/** Basis expansion of a single gate. */
std::vector<Gate> lower_gate(const Gate& gate);

struct EulerAngles {
  double b1;
  double b2;
  double b3;
};

/**
 * Finds b with Rz(b3) Rx(b2) Rz(b1) = Rx(a3) Rz(a2) Rx(a1) up to global phase
 * (a1 and b1 are applied first). Outputs lie in (-pi, pi]. Swapping the roles
 * of X and Z in both products gives the same angles, so this also turns
 * ZXZ runs into XZX runs.
 */
EulerAngles euler_xzx_to_zxz(double a1, double a2, double a3);

}  // namespace gadgetopt
