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
#include <utility>
#include <vector>

#include "gadgetopt/bit_matrix.hpp"

namespace gadgetopt {

enum class Basis { Z, X };

/**
 * A phase gadget exp(-i (angle/2) P) where P is the tensor product of Z (or X)
 * on every leg. Even-parity basis states pick up e^{-i angle/2}, odd-parity
 * ones e^{+i angle/2}; a one-legged Z gadget is exactly RZ(angle).
 */
struct GadgetEntry {
  Basis basis = Basis::Z;
  double angle = 0.0;
  BitVec legs;

  /** Same basis and legs; angles ignored. */
  bool same_structure(const GadgetEntry& other) const {
    return basis == other.basis && legs == other.legs;
  }
  friend bool operator==(const GadgetEntry&, const GadgetEntry&) = default;
};

/** Basis and angle of one entry: the part of a gadget the optimizer never changes. */
using GadgetLabel = std::pair<Basis, double>;

class GadgetCircuit {
 public:
  GadgetCircuit() = default;
  explicit GadgetCircuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  /**
   * Builds the circuit whose k-th Z entry has legs lz.column(k) and k-th X
   * entry lx.column(k), interleaved and labelled by `sequence`.
   */
  static GadgetCircuit from_leg_matrices(const BitMatrix& lz, const BitMatrix& lx,
                                         const std::vector<GadgetLabel>& sequence);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<GadgetEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /**
   * Appends an entry. Zero-leg gadgets only contribute a global phase and are
   * dropped; returns false in that case.
   */
  bool add(GadgetEntry entry);
  bool add(Basis basis, double angle, BitVec legs) {
    return add(GadgetEntry{basis, angle, std::move(legs)});
  }
  GadgetCircuit slice(std::size_t begin, std::size_t end) const;

  std::vector<GadgetLabel> sequence() const;
  std::size_t total_legs() const;

  friend bool operator==(const GadgetCircuit&, const GadgetCircuit&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<GadgetEntry> entries_;
};

struct LegMatrices {
  BitMatrix lz;
  BitMatrix lx;
};

LegMatrices leg_matrices(const GadgetCircuit& g);

/**
 * Acts on the legs by a CNOT-circuit action c: Z legs become c * legs and X
 * legs become (c^T)^-1 * legs. Throws NotInvertible.
 */
GadgetCircuit apply_action(const GadgetCircuit& g, const BitMatrix& c);

/** Z and X gadgets commute iff they share an even number of legs. */
bool commutes(const GadgetEntry& a, const GadgetEntry& b);

/**
 * Merges equal-structure entries that can be made adjacent through commuting
 * swaps, dropping merged entries whose angle is a multiple of 2*pi. Runs to a
 * fixpoint.
 */
GadgetCircuit fuse_adjacent(const GadgetCircuit& g);

/**
 *   qubits <n>
 *   zgadget <angle> <bitstring>
 *   xgadget <angle> <bitstring>
 *
 * Character k of the bit string is qubit k.
 */
std::string to_text(const GadgetCircuit& g);
GadgetCircuit parse_gadgets(std::string_view text);

}  // namespace gadgetopt
