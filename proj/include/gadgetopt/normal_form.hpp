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

#include <string>
#include <string_view>
#include <vector>

#include "gadgetopt/bit_matrix.hpp"
#include "gadgetopt/circuit.hpp"
#include "gadgetopt/gadget.hpp"

namespace gadgetopt {

struct Cnot {
  Qubit control;
  Qubit target;
  friend bool operator==(const Cnot&, const Cnot&) = default;
};

class CnotCircuit {
 public:
  CnotCircuit() = default;
  explicit CnotCircuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Cnot>& cnots() const { return cnots_; }
  std::size_t size() const { return cnots_.size(); }
  bool empty() const { return cnots_.empty(); }

  CnotCircuit& add(Qubit control, Qubit target);
  /** The same CNOTs in reverse order; the inverse circuit. */
  CnotCircuit reversed() const;
  GateCircuit to_gates() const;

  friend bool operator==(const CnotCircuit&, const CnotCircuit&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Cnot> cnots_;
};

/** Gadgets applied first, then the CNOT tail. */
struct NormalForm {
  GadgetCircuit gadgets;
  CnotCircuit tail;
};

/**
 * Action of a CNOT circuit on Z-gadget legs: a Z gadget with legs v placed
 * after the circuit equals one with legs h_z(c) * v placed before it.
 *
 * h_z(CNOT(c, t)) = I + E[c][t], and h_z of a concatenation is the product of
 * the per-gate matrices in application order. Equivalently h_z(c) is the
 * transpose of the circuit's basis-state permutation x -> A x.
 */
BitMatrix h_z(const CnotCircuit& c);
/** Action on X-gadget legs; always inverse_transpose(h_z(c)). */
BitMatrix h_x(const CnotCircuit& c);

/**
 * Pushes every rotation of a {CNOT, RZ, RX} circuit to the front. Throws
 * std::invalid_argument on any other gate kind.
 */
NormalForm extract(const GateCircuit& c);

/** entries = prefix (offset entries) followed by `repeats` copies of a unit. */
struct LayerStructure {
  std::size_t unit_length = 0;
  std::size_t repeats = 0;
  std::size_t offset = 0;
  friend bool operator==(const LayerStructure&, const LayerStructure&) = default;
};

/**
 * Finds a repeating unit with the KMP failure function. Entries compare by
 * basis and legs, and also by angle when `match_angles` is set. A prefix is
 * accepted only when it is shorter than the unit; the smallest such offset
 * wins, then the shortest unit.
 */
LayerStructure detect_layers(const GadgetCircuit& g, bool match_angles = false);

/**
 * CNOT circuit with h_z(result) == m, by Gauss-Jordan elimination with
 * first-row pivoting. At most n^2 gates. Throws NotInvertible.
 */
CnotCircuit synth_cnot(const BitMatrix& m);

enum class GadgetShape { Ladder, Tree };

/**
 * CNOT fan-in onto the lowest-index leg, a central rotation, mirrored fan-out.
 * X gadgets use the same layout with every CNOT reversed and an RX centre.
 */
GateCircuit synth_gadget(const GadgetEntry& e, std::size_t n_qubits, GadgetShape shape);
GateCircuit synth_gadget_circuit(const GadgetCircuit& g, GadgetShape shape);

std::string to_text(const NormalForm& nf);
/** Gadget format with optional trailing `cnot <c> <t>` lines forming the tail. */
NormalForm parse_normal_form(std::string_view text);

}  // namespace gadgetopt
