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
#include <vector>

#include "gadgetopt/bit_matrix.hpp"
#include "gadgetopt/random.hpp"

namespace gadgetopt {

struct AnnealParams {
  double t0 = 1.0;
  std::size_t iterations = 5000;
  std::size_t attempts = 20;
  std::uint64_t seed = 0;

  /** Throws std::invalid_argument unless t0 > 0, iterations >= 1, attempts >= 1. */
  void validate() const;
};

/** t0 = max(5, popcount(lz) + popcount(lx)) / 10, 5000 iterations, 20 attempts. */
AnnealParams default_anneal_params(const BitMatrix& lz, const BitMatrix& lx,
                                   std::uint64_t seed = 0);

struct AnnealResult {
  BitMatrix best_c;
  std::size_t best_energy = 0;
  /** Energy of the identity, i.e. of the input legs. */
  std::size_t initial_energy = 0;
  std::vector<std::size_t> per_attempt_energies;
};

/** popcount(c * lz) + popcount((c^T)^-1 * lx). Throws NotInvertible. */
std::size_t energy(const BitMatrix& c, const BitMatrix& lz, const BitMatrix& lx);

/**
 * Flips one uniformly chosen entry of c, redrawing until the result is
 * invertible. For n = 1 no such flip exists and c is returned unchanged.
 */
BitMatrix neighbor(const BitMatrix& c, Rng& rng);

/**
 * Simulated annealing over GL(n, 2) with temperature t0 (1 - k/K) and
 * Metropolis acceptance. Runs `attempts` chains from random invertible
 * starts, each seeded from (seed, attempt), and returns the lowest-energy
 * matrix seen, never worse than the identity. Ties go to the earlier attempt.
 */
AnnealResult anneal(const BitMatrix& lz, const BitMatrix& lx, const AnnealParams& params);

}  // namespace gadgetopt
