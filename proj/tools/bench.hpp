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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gadgetopt/pipeline.hpp"

namespace gadgetopt::cli {

struct BenchConfig {
  std::size_t n_qubits = 8;
  std::vector<std::size_t> gadgets_per_layer{10};
  std::vector<std::size_t> layers{1, 2, 5, 10};
  std::size_t samples_per_cell = 10;
  GadgetShape shape = GadgetShape::Tree;
  bool verify = true;
  std::uint64_t seed = 0;
  std::optional<double> t0;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> attempts;

  /** Throws std::invalid_argument on empty sweeps or zero entries. */
  void validate() const;
};

struct BenchCell {
  std::size_t gadgets = 0;
  std::size_t layers = 0;
  std::size_t sample = 0;
  OptimizeReport report;
};

struct BenchRow {
  std::size_t gadgets = 0;
  std::size_t layers = 0;
  double depth_before = 0.0;
  double depth_after = 0.0;
  double count_before = 0.0;
  double count_after = 0.0;

  /** Relative saving in percent; 0 when the before value is 0. */
  double depth_saving() const;
  double count_saving() const;
};

/**
 * Optimizes `samples_per_cell` random-gadget ansätze per (gadgets, layers)
 * cell. A sample's unit structure and annealing seed depend only on
 * (seed, n, gadgets, sample), so different layer counts of one sample repeat
 * the same unit.
 */
std::vector<BenchCell> run_bench(const BenchConfig& config);

/** Per-cell means, in the order of the configuration's sweeps. */
std::vector<BenchRow> summarize(const BenchConfig& config, const std::vector<BenchCell>& cells);

void write_bench_table(std::ostream& os, const BenchConfig& config,
                       const std::vector<BenchRow>& rows);

inline constexpr const char* kCsvHeader = "kind,n,gadgets,layers,sample,metric,before,after";

void write_bench_csv(std::ostream& os, const BenchConfig& config,
                     const std::vector<BenchCell>& cells);

}  // namespace gadgetopt::cli
