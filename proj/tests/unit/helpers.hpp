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

// Random instance generators shared by the unit tests.

#pragma once

#include <vector>

#include "gadgetopt/angles.hpp"
#include "gadgetopt/circuit.hpp"
#include "gadgetopt/gadget.hpp"
#include "gadgetopt/normal_form.hpp"
#include "gadgetopt/random.hpp"

namespace gadgetopt::testing {

inline double random_angle(Rng& rng) { return (2.0 * rng.uniform01() - 1.0) * kPi; }

inline std::pair<Qubit, Qubit> random_pair(Rng& rng, std::size_t n) {
  const Qubit a = rng.below(n);
  Qubit b = rng.below(n - 1);
  if (b >= a) ++b;
  return {a, b};
}

inline CnotCircuit random_cnots(Rng& rng, std::size_t n, std::size_t gates) {
  CnotCircuit c(n);
  for (std::size_t k = 0; k < gates; ++k) {
    const auto [a, b] = random_pair(rng, n);
    c.add(a, b);
  }
  return c;
}

/** Random circuit over {CNOT, RZ, RX}; n >= 2. */
inline GateCircuit random_basis_circuit(Rng& rng, std::size_t n, std::size_t gates) {
  GateCircuit c(n);
  for (std::size_t k = 0; k < gates; ++k) {
    switch (rng.below(3)) {
      case 0: {
        const auto [a, b] = random_pair(rng, n);
        c.add(Gate::cnot(a, b));
        break;
      }
      case 1:
        c.add(Gate::rz(random_angle(rng), rng.below(n)));
        break;
      default:
        c.add(Gate::rx(random_angle(rng), rng.below(n)));
        break;
    }
  }
  return c;
}

/** Random circuit over every gate kind; n >= 2. */
inline GateCircuit random_rich_circuit(Rng& rng, std::size_t n, std::size_t gates) {
  GateCircuit c(n);
  for (std::size_t k = 0; k < gates; ++k) {
    const auto [a, b] = random_pair(rng, n);
    const double t = random_angle(rng);
    switch (rng.below(9)) {
      case 0: c.add(Gate::cnot(a, b)); break;
      case 1: c.add(Gate::rz(t, a)); break;
      case 2: c.add(Gate::rx(t, a)); break;
      case 3: c.add(Gate::ry(t, a)); break;
      case 4: c.add(Gate::h(a)); break;
      case 5: c.add(Gate::cz(a, b)); break;
      case 6: c.add(Gate::crz(t, a, b)); break;
      case 7: c.add(Gate::crx(t, a, b)); break;
      default: c.add(Gate::cu1(t, a, b)); break;
    }
  }
  return c;
}

inline BitVec random_nonzero(Rng& rng, std::size_t n) {
  BitVec v(n);
  while (!v.any()) {
    for (std::size_t q = 0; q < n; ++q) v.set(q, rng.coin());
  }
  return v;
}

inline GadgetEntry random_gadget(Rng& rng, std::size_t n) {
  return {rng.coin() ? Basis::Z : Basis::X, random_angle(rng), random_nonzero(rng, n)};
}

inline GadgetCircuit random_gadgets(Rng& rng, std::size_t n, std::size_t count) {
  GadgetCircuit g(n);
  for (std::size_t k = 0; k < count; ++k) g.add(random_gadget(rng, n));
  return g;
}

/** Enumerates GL(n, 2) for small n. */
inline std::vector<BitMatrix> general_linear_group(std::size_t n) {
  std::vector<BitMatrix> out;
  const std::size_t cells = n * n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    BitMatrix m(n, n);
    for (std::size_t k = 0; k < cells; ++k) {
      if ((code >> k) & 1U) m.set(k / n, k % n, true);
    }
    if (is_invertible(m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace gadgetopt::testing
