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

#include <Eigen/Dense>
#include <stdexcept>

#include "gadgetopt/circuit.hpp"
#include "gadgetopt/gadget.hpp"

namespace gadgetopt {

/**
 * Dense 2^n x 2^n matrix. Qubit 0 is the most significant bit of the basis
 * index, so CNOT(0, 1) on two qubits swaps |10> and |11>.
 */
using Unitary = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxOracleQubits = 10;

class OracleTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

Unitary gate_matrix(const Gate& g);
Unitary unitary_of_circuit(const GateCircuit& c);
Unitary unitary_of_gadgets(const GadgetCircuit& g);
Unitary unitary_of_gadget(const GadgetEntry& e, std::size_t n_qubits);

bool is_unitary(const Unitary& u, double tol = 1e-9);

struct PhaseComparison {
  bool equal = false;
  /** max |u - e^{i phi} v| for the aligning phase phi. */
  double max_error = 0.0;
  double phase = 0.0;
};

/**
 * Aligns the phase using the largest-magnitude entry of v^dagger u, then
 * compares entry-wise.
 */
PhaseComparison compare_up_to_phase(const Unitary& u, const Unitary& v, double tol = 1e-9);
bool equiv_up_to_phase(const Unitary& u, const Unitary& v, double tol = 1e-9);

}  // namespace gadgetopt
