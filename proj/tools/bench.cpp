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

#include "bench.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gadgetopt/ansatz.hpp"

namespace gadgetopt::cli {

namespace {

double saving(double before, double after) {
  return before > 0.0 ? 100.0 * (before - after) / before : 0.0;
}

std::string percent(double before, double after) {
  if (before <= 0.0) return "n/a";
  return std::to_string(std::lround(saving(before, after))) + "%";
}

}  // namespace

void BenchConfig::validate() const {
  if (n_qubits == 0) throw std::invalid_argument("bench needs at least one qubit");
  if (gadgets_per_layer.empty() || layers.empty()) {
    throw std::invalid_argument("bench sweeps must not be empty");
  }
  for (auto g : gadgets_per_layer) {
    if (g == 0) throw std::invalid_argument("gadgets per layer must be positive");
  }
  for (auto l : layers) {
    if (l == 0) throw std::invalid_argument("layer counts must be positive");
  }
  if (samples_per_cell == 0) throw std::invalid_argument("samples per cell must be positive");
}

double BenchRow::depth_saving() const { return saving(depth_before, depth_after); }
double BenchRow::count_saving() const { return saving(count_before, count_after); }

std::vector<BenchCell> run_bench(const BenchConfig& config) {
  config.validate();
  std::vector<BenchCell> cells;
  const std::size_t n = config.n_qubits;
  for (auto g : config.gadgets_per_layer) {
    for (auto l : config.layers) {
      for (std::size_t s = 0; s < config.samples_per_cell; ++s) {
        AnsatzSpec spec;
        spec.kind = AnsatzKind::RandomGadget;
        spec.n_qubits = n;
        spec.layers = l;
        spec.gadgets_per_layer = g;
        spec.seed = Rng::derive(config.seed, {n, g, s});
        const GateCircuit c =
            synth_gadget_circuit(std::get<GadgetCircuit>(generate(spec)), config.shape);

        OptimizeOptions o;
        o.shape = config.shape;
        o.verify = config.verify;
        o.t0 = config.t0;
        o.iterations = config.iterations;
        o.attempts = config.attempts;
        o.seed = Rng::derive(config.seed, {n, g, s, 1});
        cells.push_back({g, l, s, optimize(c, o).report});
      }
    }
  }
  return cells;
}

std::vector<BenchRow> summarize(const BenchConfig& config, const std::vector<BenchCell>& cells) {
  std::vector<BenchRow> rows;
  for (auto g : config.gadgets_per_layer) {
    for (auto l : config.layers) {
      BenchRow row{g, l};
      std::size_t count = 0;
      for (const auto& cell : cells) {
        if (cell.gadgets != g || cell.layers != l) continue;
        row.depth_before += static_cast<double>(cell.report.before.cnot_depth);
        row.depth_after += static_cast<double>(cell.report.after.cnot_depth);
        row.count_before += static_cast<double>(cell.report.before.cnot_count);
        row.count_after += static_cast<double>(cell.report.after.cnot_count);
        ++count;
      }
      if (count > 0) {
        const auto k = static_cast<double>(count);
        row.depth_before /= k;
        row.depth_after /= k;
        row.count_before /= k;
        row.count_after /= k;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_table(std::ostream& os, const BenchConfig& config,
                       const std::vector<BenchRow>& rows) {
  os << "n=" << config.n_qubits << " samples=" << config.samples_per_cell
     << " shape=" << (config.shape == GadgetShape::Tree ? "tree" : "ladder") << "\n";
  os << std::setw(8) << "gadgets" << std::setw(8) << "layers" << " |" << std::setw(8) << "depth"
     << std::setw(8) << "after" << std::setw(8) << "saving" << " |" << std::setw(8) << "count"
     << std::setw(8) << "after" << std::setw(8) << "saving" << "\n";
  for (const auto& r : rows) {
    os << std::setw(8) << r.gadgets << std::setw(8) << r.layers << " |" << std::setw(8)
       << std::lround(r.depth_before) << std::setw(8) << std::lround(r.depth_after)
       << std::setw(8) << percent(r.depth_before, r.depth_after) << " |" << std::setw(8)
       << std::lround(r.count_before) << std::setw(8) << std::lround(r.count_after)
       << std::setw(8) << percent(r.count_before, r.count_after) << "\n";
  }
}

void write_bench_csv(std::ostream& os, const BenchConfig& config,
                     const std::vector<BenchCell>& cells) {
  os << kCsvHeader << "\n";
  for (const auto& cell : cells) {
    const auto row = [&](std::string_view metric, std::size_t before, std::size_t after) {
      os << "random_gadget," << config.n_qubits << "," << cell.gadgets << "," << cell.layers
         << "," << cell.sample << "," << metric << "," << before << "," << after << "\n";
    };
    row("cnot_depth", cell.report.before.cnot_depth, cell.report.after.cnot_depth);
    row("cnot_count", cell.report.before.cnot_count, cell.report.after.cnot_count);
    row("energy", cell.report.energy_before, cell.report.energy_after);
  }
}

}  // namespace gadgetopt::cli
