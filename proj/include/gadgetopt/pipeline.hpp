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

#include <optional>
#include <stdexcept>
#include <string>

#include "gadgetopt/anneal.hpp"
#include "gadgetopt/circuit.hpp"
#include "gadgetopt/normal_form.hpp"
#include "gadgetopt/oracle.hpp"

namespace gadgetopt {

struct CircuitMetrics {
  std::size_t cnot_count = 0;
  std::size_t cnot_depth = 0;
  std::size_t gate_count = 0;
};

CircuitMetrics measure(const GateCircuit& c);

enum class Verification { Yes, No, Skipped };

std::string_view to_string(Verification v);

struct OptimizeReport {
  CircuitMetrics before;
  CircuitMetrics after;
  /** Total legs of the repeated region as extracted from the input. */
  std::size_t energy_before = 0;
  /** Total legs of the same region after fusion and the annealed action. */
  std::size_t energy_after = 0;
  std::size_t layers_detected = 0;
  std::size_t unit_length = 0;
  Verification verified = Verification::Skipped;
  double max_error = 0.0;
};

struct OptimizeOptions {
  GadgetShape shape = GadgetShape::Tree;
  bool verify = true;
  std::size_t verify_max_qubits = kMaxOracleQubits;
  double tolerance = 1e-9;
  bool match_angles = false;
  /** Annealing overrides; unset fields use default_anneal_params of the unit. */
  std::optional<double> t0;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> attempts;
  std::uint64_t seed = 0;
};

class VerificationFailed : public std::runtime_error {
 public:
  explicit VerificationFailed(double max_error)
      : std::runtime_error("optimized circuit is not equivalent to the input (max error " +
                           std::to_string(max_error) + ")"),
        max_error_(max_error) {}
  double max_error() const { return max_error_; }

 private:
  double max_error_;
};

struct OptimizeResult {
  GateCircuit circuit;
  OptimizeReport report;
};

/**
 * Lower, extract the gadget normal form, find the repeating unit, anneal a
 * CNOT action C over it, and emit
 *
 *   prefix gadgets ; synth(C^-1) ; transformed unit x repeats ; synth(C * h_z(tail))
 *
 * followed by the single-qubit Euler peephole. With verification on and
 * n <= verify_max_qubits the result is oracle-checked and VerificationFailed
 * is thrown on mismatch.
 */
OptimizeResult optimize(const GateCircuit& c, const OptimizeOptions& options = {});

/**
 * Collapses every maximal run of single-qubit rotations on a wire: equal-basis
 * neighbours fuse, zero rotations vanish, and alternating runs longer than
 * three are folded with Euler decompositions. Input must be over
 * {CNOT, RZ, RX}.
 */
GateCircuit euler_peephole(const GateCircuit& c);

std::string format_report(const OptimizeReport& r);
/** Stable `key=value` lines. */
std::string format_report_kv(const OptimizeReport& r);

}  // namespace gadgetopt
