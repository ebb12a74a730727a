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

#include "gadgetopt/pipeline.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include "gadgetopt/angles.hpp"

namespace gadgetopt {

CircuitMetrics measure(const GateCircuit& c) {
  return {cnot_count(c), cnot_depth(c), c.size()};
}

std::string_view to_string(Verification v) {
  switch (v) {
    case Verification::Yes:
      return "yes";
    case Verification::No:
      return "no";
    case Verification::Skipped:
      return "skipped";
  }
  return "skipped";
}

namespace {

struct Rotation {
  Basis basis;
  double angle;
};

void fuse_run(std::vector<Rotation>& run) {
  std::vector<Rotation> out;
  for (const auto& r : run) {
    if (!out.empty() && out.back().basis == r.basis) {
      out.back().angle = normalize_angle(out.back().angle + r.angle);
    } else {
      out.push_back({r.basis, normalize_angle(r.angle)});
    }
    if (is_zero_angle(out.back().angle)) out.pop_back();
  }
  run = std::move(out);
}

// After fusion a run alternates bases. Each Euler rewrite of the first three
// rotations flips their outer basis so it fuses with the fourth.
void simplify_run(std::vector<Rotation>& run) {
  fuse_run(run);
  while (run.size() > 3) {
    const EulerAngles e = euler_xzx_to_zxz(run[0].angle, run[1].angle, run[2].angle);
    const Basis outer = run[0].basis == Basis::X ? Basis::Z : Basis::X;
    const Basis inner = run[1].basis == Basis::X ? Basis::Z : Basis::X;
    run[0] = {outer, e.b1};
    run[1] = {inner, e.b2};
    run[2] = {outer, e.b3};
    fuse_run(run);
  }
}

void flush(std::vector<Rotation>& run, Qubit q, GateCircuit& out) {
  simplify_run(run);
  for (const auto& r : run) {
    out.add(r.basis == Basis::Z ? Gate::rz(r.angle, q) : Gate::rx(r.angle, q));
  }
  run.clear();
}

GateCircuit gadgets_to_gates(const GadgetCircuit& g, GadgetShape shape) {
  return synth_gadget_circuit(g, shape);
}

bool all_same_structure(const std::vector<GadgetCircuit>& reps) {
  for (std::size_t r = 1; r < reps.size(); ++r) {
    if (reps[r].size() != reps[0].size()) return false;
    for (std::size_t k = 0; k < reps[0].size(); ++k) {
      if (!reps[r].entries()[k].same_structure(reps[0].entries()[k])) return false;
    }
  }
  return true;
}

GadgetCircuit concatenate(const std::vector<GadgetCircuit>& parts, std::size_t n) {
  GadgetCircuit out(n);
  for (const auto& p : parts) {
    for (const auto& e : p.entries()) out.add(e);
  }
  return out;
}

}  // namespace

GateCircuit euler_peephole(const GateCircuit& c) {
  const std::size_t n = c.n_qubits();
  std::vector<std::vector<Rotation>> pending(n);
  GateCircuit out(n);
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::RZ:
        pending[g.qubit()].push_back({Basis::Z, g.angle});
        break;
      case GateKind::RX:
        pending[g.qubit()].push_back({Basis::X, g.angle});
        break;
      case GateKind::CNOT:
        flush(pending[g.control()], g.control(), out);
        flush(pending[g.target()], g.target(), out);
        out.add(g);
        break;
      default:
        throw std::invalid_argument("euler_peephole: gate outside {CNOT, RZ, RX}");
    }
  }
  for (Qubit q = 0; q < n; ++q) flush(pending[q], q, out);
  return out;
}

OptimizeResult optimize(const GateCircuit& input, const OptimizeOptions& options) {
  const std::size_t n = input.n_qubits();
  if (n == 0) throw std::invalid_argument("optimize: circuit has no qubits");
  const GateCircuit lowered = lower_to_basis(input);

  OptimizeReport report;
  report.before = measure(lowered);

  const NormalForm nf = extract(lowered);
  const LayerStructure layers = detect_layers(nf.gadgets, options.match_angles);
  report.layers_detected = layers.repeats;
  report.unit_length = layers.unit_length;

  const GadgetCircuit prefix = nf.gadgets.slice(0, layers.offset);
  std::vector<GadgetCircuit> reps;
  for (std::size_t r = 0; r < layers.repeats; ++r) {
    const std::size_t begin = layers.offset + r * layers.unit_length;
    const GadgetCircuit rep = nf.gadgets.slice(begin, begin + layers.unit_length);
    report.energy_before += rep.total_legs();
    reps.push_back(fuse_adjacent(rep));
  }

  // Identical repetitions share one unit; otherwise anneal the whole region.
  const bool uniform = all_same_structure(reps);
  const GadgetCircuit target = uniform ? reps.front() : concatenate(reps, n);
  const std::size_t weight = uniform ? reps.size() : 1;
  const LegMatrices legs = leg_matrices(target);
  AnnealParams params = default_anneal_params(legs.lz, legs.lx, options.seed);
  if (options.t0) params.t0 = *options.t0;
  if (options.iterations) params.iterations = *options.iterations;
  if (options.attempts) params.attempts = *options.attempts;
  const AnnealResult annealed = anneal(legs.lz, legs.lx, params);
  const BitMatrix& c = annealed.best_c;
  report.energy_after = weight * annealed.best_energy;

  const BitMatrix identity = BitMatrix::identity(n);
  const BitMatrix tail_action = h_z(nf.tail);

  GateCircuit out(n);
  out.append(gadgets_to_gates(prefix, options.shape));
  if (c == identity) {
    for (const auto& rep : reps) out.append(gadgets_to_gates(rep, options.shape));
    const CnotCircuit resynth = synth_cnot(tail_action);
    out.append((resynth.size() < nf.tail.size() ? resynth : nf.tail).to_gates());
  } else {
    out.append(synth_cnot(invert(c)).to_gates());
    for (const auto& rep : reps) out.append(gadgets_to_gates(apply_action(rep, c), options.shape));
    out.append(synth_cnot(mat_mul(c, tail_action)).to_gates());
  }
  out = euler_peephole(out);
  report.after = measure(out);

  if (options.verify && n <= options.verify_max_qubits && n <= kMaxOracleQubits) {
    const PhaseComparison cmp = compare_up_to_phase(unitary_of_circuit(input),
                                                    unitary_of_circuit(out), options.tolerance);
    report.max_error = cmp.max_error;
    report.verified = cmp.equal ? Verification::Yes : Verification::No;
    if (!cmp.equal) throw VerificationFailed(cmp.max_error);
  }
  return {std::move(out), report};
}

namespace {

double savings(std::size_t before, std::size_t after) {
  if (before == 0) return 0.0;
  return 100.0 * (static_cast<double>(before) - static_cast<double>(after)) /
         static_cast<double>(before);
}

}  // namespace

std::string format_report(const OptimizeReport& r) {
  std::ostringstream os;
  auto row = [&os](std::string_view name, std::size_t before, std::size_t after) {
    os << std::left << std::setw(12) << name << std::right << std::setw(10) << before
       << std::setw(10) << after << std::setw(10) << std::fixed << std::setprecision(0)
       << savings(before, after) << "%\n";
  };
  os << std::left << std::setw(12) << "metric" << std::right << std::setw(10) << "before"
     << std::setw(10) << "after" << std::setw(9) << "saving" << "\n";
  row("cnot_count", r.before.cnot_count, r.after.cnot_count);
  row("cnot_depth", r.before.cnot_depth, r.after.cnot_depth);
  row("gate_count", r.before.gate_count, r.after.gate_count);
  row("legs", r.energy_before, r.energy_after);
  os << "layers " << r.layers_detected << " x " << r.unit_length << " gadgets\n";
  os << "verified " << to_string(r.verified) << "\n";
  return os.str();
}

std::string format_report_kv(const OptimizeReport& r) {
  std::ostringstream os;
  os << "cnot_count_before=" << r.before.cnot_count << "\n"
     << "cnot_count_after=" << r.after.cnot_count << "\n"
     << "cnot_depth_before=" << r.before.cnot_depth << "\n"
     << "cnot_depth_after=" << r.after.cnot_depth << "\n"
     << "gate_count_before=" << r.before.gate_count << "\n"
     << "gate_count_after=" << r.after.gate_count << "\n"
     << "energy_before=" << r.energy_before << "\n"
     << "energy_after=" << r.energy_after << "\n"
     << "layers_detected=" << r.layers_detected << "\n"
     << "unit_length=" << r.unit_length << "\n"
     << "verified=" << to_string(r.verified) << "\n";
  return os.str();
}

}  // namespace gadgetopt
