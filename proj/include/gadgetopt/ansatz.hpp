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

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "gadgetopt/circuit.hpp"
#include "gadgetopt/gadget.hpp"
#include "gadgetopt/normal_form.hpp"

namespace gadgetopt {

enum class AnsatzKind { Staircase, BrickWall, RandomGadget };

std::string_view to_string(AnsatzKind kind);
/** Accepts "staircase", "brickwall", "random_gadget". */
AnsatzKind parse_ansatz_kind(std::string_view text);

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::Staircase;
  std::size_t n_qubits = 4;
  std::size_t layers = 1;
  std::size_t gadgets_per_layer = 10;
  std::uint64_t seed = 0;
  /** Staircase/brick-wall only: add an RX on every qubit after the RZ layer. */
  bool with_rx = false;

  /** Throws std::invalid_argument on zero dimensions. */
  void validate() const;
};

using Ansatz = std::variant<GateCircuit, GadgetCircuit>;

/**
 * Staircase layer: CNOT(n-2, n-1), ..., CNOT(0, 1), then RZ on every qubit.
 * Brick-wall layer: CNOTs on bonds (1,2), (3,4), ... then (0,1), (2,3), ...,
 * then RZ on every qubit. Both use fresh random angles per layer.
 *
 * Random-gadget ansatz: one layer structure of uniformly random basis and
 * non-empty legs, repeated `layers` times with fresh angles.
 */
Ansatz generate(const AnsatzSpec& spec);

/** One CNOT layer of the staircase or brick-wall layout. */
CnotCircuit staircase_layer(std::size_t n_qubits);
CnotCircuit brickwall_layer(std::size_t n_qubits);

class NonMonotonic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Smallest k >= 1 with h_z(layer)^k = I. Requires every CNOT to point the
 * same way (all control < target, or all control > target).
 */
std::size_t mppp_period(const CnotCircuit& layer);

}  // namespace gadgetopt
