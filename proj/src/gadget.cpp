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

#include "gadgetopt/gadget.hpp"

#include <cmath>
#include <sstream>

#include "gadgetopt/angles.hpp"
#include "gadgetopt/normal_form.hpp"

namespace gadgetopt {

bool GadgetCircuit::add(GadgetEntry entry) {
  if (entry.legs.size() != n_qubits_) {
    throw DimensionMismatch("gadget legs have length " + std::to_string(entry.legs.size()) +
                            ", expected " + std::to_string(n_qubits_));
  }
  if (!std::isfinite(entry.angle)) throw std::invalid_argument("gadget angle is not finite");
  if (!entry.legs.any()) return false;
  entries_.push_back(std::move(entry));
  return true;
}

GadgetCircuit GadgetCircuit::from_leg_matrices(const BitMatrix& lz, const BitMatrix& lx,
                                               const std::vector<GadgetLabel>& sequence) {
  if (lz.rows() != lx.rows()) throw DimensionMismatch("L_Z and L_X row counts differ");
  GadgetCircuit g(lz.rows());
  std::size_t zi = 0;
  std::size_t xi = 0;
  for (const auto& [basis, angle] : sequence) {
    const BitMatrix& src = basis == Basis::Z ? lz : lx;
    std::size_t& idx = basis == Basis::Z ? zi : xi;
    if (idx >= src.cols()) throw DimensionMismatch("sequence has more entries than columns");
    g.add(basis, angle, src.column(idx++));
  }
  if (zi != lz.cols() || xi != lx.cols()) {
    throw DimensionMismatch("sequence does not use every column");
  }
  return g;
}

GadgetCircuit GadgetCircuit::slice(std::size_t begin, std::size_t end) const {
  GadgetCircuit g(n_qubits_);
  g.entries_.assign(entries_.begin() + static_cast<std::ptrdiff_t>(begin),
                    entries_.begin() + static_cast<std::ptrdiff_t>(end));
  return g;
}

std::vector<GadgetLabel> GadgetCircuit::sequence() const {
  std::vector<GadgetLabel> s;
  s.reserve(entries_.size());
  for (const auto& e : entries_) s.emplace_back(e.basis, e.angle);
  return s;
}

std::size_t GadgetCircuit::total_legs() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.legs.popcount();
  return n;
}

LegMatrices leg_matrices(const GadgetCircuit& g) {
  std::vector<BitVec> z;
  std::vector<BitVec> x;
  for (const auto& e : g.entries()) (e.basis == Basis::Z ? z : x).push_back(e.legs);
  return {BitMatrix::from_columns(g.n_qubits(), z), BitMatrix::from_columns(g.n_qubits(), x)};
}

GadgetCircuit apply_action(const GadgetCircuit& g, const BitMatrix& c) {
  if (c.rows() != g.n_qubits() || !c.is_square()) {
    throw DimensionMismatch("action matrix does not match the qubit count");
  }
  const BitMatrix dual = inverse_transpose(c);
  GadgetCircuit out(g.n_qubits());
  for (const auto& e : g.entries()) {
    out.add(e.basis, e.angle, mat_vec(e.basis == Basis::Z ? c : dual, e.legs));
  }
  return out;
}

bool commutes(const GadgetEntry& a, const GadgetEntry& b) {
  if (a.basis == b.basis) return true;
  return !a.legs.dot(b.legs);
}

GadgetCircuit fuse_adjacent(const GadgetCircuit& g) {
  std::vector<GadgetEntry> entries = g.entries();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < entries.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        if (!entries[j].same_structure(entries[i])) {
          if (!commutes(entries[i], entries[j])) break;
          continue;
        }
        // Every entry strictly between i and j commutes with entries[i], which
        // shares its structure with entries[j], so j can slide next to i.
        entries[i].angle += entries[j].angle;
        entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(j));
        if (is_zero_angle(entries[i].angle)) {
          entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(i));
        }
        changed = true;
        break;
      }
    }
  }
  GadgetCircuit out(g.n_qubits());
  for (auto& e : entries) out.add(std::move(e));
  return out;
}

std::string to_text(const GadgetCircuit& g) {
  std::ostringstream os;
  os << "qubits " << g.n_qubits() << '\n';
  for (const auto& e : g.entries()) {
    os << (e.basis == Basis::Z ? "zgadget " : "xgadget ") << format_angle(e.angle) << ' '
       << e.legs.to_string() << '\n';
  }
  return os.str();
}

GadgetCircuit parse_gadgets(std::string_view text) {
  NormalForm nf = parse_normal_form(text);
  if (!nf.tail.empty()) throw ParseError(0, "gadget list must not contain CNOT lines");
  return std::move(nf.gadgets);
}

}  // namespace gadgetopt
