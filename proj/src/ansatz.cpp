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

#include "gadgetopt/ansatz.hpp"

#include <string>

#include "gadgetopt/angles.hpp"
#include "gadgetopt/random.hpp"

namespace gadgetopt {

std::string_view to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::Staircase:
      return "staircase";
    case AnsatzKind::BrickWall:
      return "brickwall";
    case AnsatzKind::RandomGadget:
      return "random_gadget";
  }
  return "staircase";
}

AnsatzKind parse_ansatz_kind(std::string_view text) {
  for (auto k : {AnsatzKind::Staircase, AnsatzKind::BrickWall, AnsatzKind::RandomGadget}) {
    if (text == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown ansatz kind: " + std::string(text));
}

void AnsatzSpec::validate() const {
  if (n_qubits == 0) throw std::invalid_argument("ansatz needs at least one qubit");
  if (layers == 0) throw std::invalid_argument("ansatz needs at least one layer");
  if (kind == AnsatzKind::RandomGadget && gadgets_per_layer == 0) {
    throw std::invalid_argument("ansatz needs at least one gadget per layer");
  }
}

CnotCircuit staircase_layer(std::size_t n) {
  CnotCircuit c(n);
  for (std::size_t q = n; q >= 2; --q) c.add(q - 2, q - 1);
  return c;
}

CnotCircuit brickwall_layer(std::size_t n) {
  CnotCircuit c(n);
  for (std::size_t q = 1; q + 1 < n; q += 2) c.add(q, q + 1);
  for (std::size_t q = 0; q + 1 < n; q += 2) c.add(q, q + 1);
  return c;
}

namespace {

double random_angle(Rng& rng) { return normalize_angle((2.0 * rng.uniform01() - 1.0) * kPi); }

GateCircuit layered(const AnsatzSpec& spec, const CnotCircuit& layer) {
  Rng rng(spec.seed);
  GateCircuit out(spec.n_qubits);
  for (std::size_t l = 0; l < spec.layers; ++l) {
    out.append(layer.to_gates());
    for (Qubit q = 0; q < spec.n_qubits; ++q) out.add(Gate::rz(random_angle(rng), q));
    if (spec.with_rx) {
      for (Qubit q = 0; q < spec.n_qubits; ++q) out.add(Gate::rx(random_angle(rng), q));
    }
  }
  return out;
}

GadgetCircuit random_gadgets(const AnsatzSpec& spec) {
  Rng rng(spec.seed);
  const std::size_t n = spec.n_qubits;
  std::vector<GadgetEntry> unit;
  for (std::size_t k = 0; k < spec.gadgets_per_layer; ++k) {
    GadgetEntry e{rng.coin() ? Basis::X : Basis::Z, 0.0, BitVec(n)};
    while (!e.legs.any()) {
      for (std::size_t q = 0; q < n; ++q) {
        if (rng.coin()) e.legs.set(q, true);
      }
    }
    unit.push_back(std::move(e));
  }
  GadgetCircuit out(n);
  for (std::size_t l = 0; l < spec.layers; ++l) {
    for (auto e : unit) {
      e.angle = random_angle(rng);
      out.add(std::move(e));
    }
  }
  return out;
}

}  // namespace

Ansatz generate(const AnsatzSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case AnsatzKind::Staircase:
      return layered(spec, staircase_layer(spec.n_qubits));
    case AnsatzKind::BrickWall:
      return layered(spec, brickwall_layer(spec.n_qubits));
    case AnsatzKind::RandomGadget:
      return random_gadgets(spec);
  }
  throw std::logic_error("unknown ansatz kind");
}

std::size_t mppp_period(const CnotCircuit& layer) {
  bool up = false;
  bool down = false;
  for (const auto& g : layer.cnots()) {
    (g.control < g.target ? up : down) = true;
  }
  if (up && down) throw NonMonotonic("CNOT layer mixes both directions");
  const BitMatrix a = h_z(layer);
  const BitMatrix identity = BitMatrix::identity(layer.n_qubits());
  BitMatrix power = a;
  std::size_t k = 1;
  while (!(power == identity)) {
    power = mat_mul(power, a);
    ++k;
  }
  return k;
}

}  // namespace gadgetopt
