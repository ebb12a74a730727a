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

#include "gadgetopt/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "gadgetopt/angles.hpp"

namespace gadgetopt {

// ------------------------------------------------------------ CnotCircuit

CnotCircuit& CnotCircuit::add(Qubit control, Qubit target) {
  if (control >= n_qubits_ || target >= n_qubits_) {
    throw std::out_of_range("CNOT qubit out of range");
  }
  if (control == target) throw std::invalid_argument("CNOT control equals target");
  cnots_.push_back({control, target});
  return *this;
}

CnotCircuit CnotCircuit::reversed() const {
  CnotCircuit r(n_qubits_);
  r.cnots_.assign(cnots_.rbegin(), cnots_.rend());
  return r;
}

GateCircuit CnotCircuit::to_gates() const {
  GateCircuit g(n_qubits_);
  for (const auto& c : cnots_) g.add(Gate::cnot(c.control, c.target));
  return g;
}

// ---------------------------------------------------------------- actions

BitMatrix h_z(const CnotCircuit& c) {
  // Right-multiplying by I + E[ctl][tgt] adds column ctl into column tgt.
  BitMatrix m = BitMatrix::identity(c.n_qubits());
  for (const auto& g : c.cnots()) m.add_col(g.target, g.control);
  return m;
}

BitMatrix h_x(const CnotCircuit& c) {
  // Per gate the X action is I + E[tgt][ctl].
  BitMatrix m = BitMatrix::identity(c.n_qubits());
  for (const auto& g : c.cnots()) m.add_col(g.control, g.target);
  return m;
}

NormalForm extract(const GateCircuit& c) {
  const std::size_t n = c.n_qubits();
  NormalForm nf{GadgetCircuit(n), CnotCircuit(n)};
  // Transposes of h_z / h_x of the CNOT prefix, so gadget legs are rows.
  BitMatrix z_rows = BitMatrix::identity(n);
  BitMatrix x_rows = BitMatrix::identity(n);
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        z_rows.add_row(g.target(), g.control());
        x_rows.add_row(g.control(), g.target());
        nf.tail.add(g.control(), g.target());
        break;
      case GateKind::RZ:
        nf.gadgets.add(Basis::Z, g.angle, z_rows.row(g.qubit()));
        break;
      case GateKind::RX:
        nf.gadgets.add(Basis::X, g.angle, x_rows.row(g.qubit()));
        break;
      default:
        throw std::invalid_argument("extract: gate '" + std::string(gate_keyword(g.kind)) +
                                    "' is not in {cnot, rz, rx}; lower the circuit first");
    }
  }
  return nf;
}

// ---------------------------------------------------------------- layers

namespace {

std::vector<std::size_t> failure_function(const std::vector<GadgetEntry>& s,
                                          const auto& equal) {
  std::vector<std::size_t> fail(s.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    while (k > 0 && !equal(s[i], s[k])) k = fail[k - 1];
    if (equal(s[i], s[k])) ++k;
    fail[i] = k;
  }
  return fail;
}

}  // namespace

LayerStructure detect_layers(const GadgetCircuit& g, bool match_angles) {
  const auto& all = g.entries();
  auto equal = [match_angles](const GadgetEntry& a, const GadgetEntry& b) {
    return a.same_structure(b) &&
           (!match_angles || std::abs(a.angle - b.angle) < kAngleTolerance);
  };
  for (std::size_t offset = 0; offset < all.size(); ++offset) {
    const std::vector<GadgetEntry> suffix(all.begin() + static_cast<std::ptrdiff_t>(offset),
                                          all.end());
    const auto fail = failure_function(suffix, equal);
    const std::size_t m = suffix.size();
    // Every full period is a multiple of the minimal one; take the smallest
    // multiple that still exceeds the prefix.
    const std::size_t minimal = m - fail[m - 1];
    if (m % minimal != 0) continue;
    for (std::size_t period = minimal; 2 * period <= m; period += minimal) {
      if (m % period == 0 && offset < period) return {period, m / period, offset};
    }
  }
  return {all.size(), 1, 0};
}

// ------------------------------------------------------------- synthesis

CnotCircuit synth_cnot(const BitMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("synth_cnot: matrix is not square");
  const std::size_t n = m.rows();
  BitMatrix work = m;
  CnotCircuit out(n);
  // Each row operation "row dst += row src" is the h_z matrix of CNOT(dst, src);
  // the recorded operations multiply back to m in recording order.
  for (std::size_t col = 0; col < n; ++col) {
    if (!work.get(col, col)) {
      std::size_t pivot = col + 1;
      while (pivot < n && !work.get(pivot, col)) ++pivot;
      if (pivot == n) throw NotInvertible();
      work.add_row(col, pivot);
      out.add(col, pivot);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && work.get(r, col)) {
        work.add_row(r, col);
        out.add(r, col);
      }
    }
  }
  return out;
}

namespace {

std::vector<Cnot> fan_in(const std::vector<Qubit>& legs, GadgetShape shape) {
  std::vector<Cnot> out;
  const std::size_t k = legs.size();
  if (shape == GadgetShape::Ladder) {
    for (std::size_t i = k; i-- > 1;) out.push_back({legs[i], legs[i - 1]});
  } else {
    for (std::size_t stride = 1; stride < k; stride *= 2) {
      for (std::size_t i = 0; i + stride < k; i += 2 * stride) {
        out.push_back({legs[i + stride], legs[i]});
      }
    }
  }
  return out;
}

}  // namespace

GateCircuit synth_gadget(const GadgetEntry& e, std::size_t n_qubits, GadgetShape shape) {
  const auto legs = e.legs.ones();
  GateCircuit out(n_qubits);
  if (legs.empty()) return out;
  const bool x_basis = e.basis == Basis::X;
  const auto cnots = fan_in(legs, shape);
  auto emit = [&](const Cnot& c) {
    out.add(x_basis ? Gate::cnot(c.target, c.control) : Gate::cnot(c.control, c.target));
  };
  for (const auto& c : cnots) emit(c);
  const double angle = normalize_angle(e.angle);
  out.add(x_basis ? Gate::rx(angle, legs.front()) : Gate::rz(angle, legs.front()));
  for (auto it = cnots.rbegin(); it != cnots.rend(); ++it) emit(*it);
  return out;
}

GateCircuit synth_gadget_circuit(const GadgetCircuit& g, GadgetShape shape) {
  GateCircuit out(g.n_qubits());
  for (const auto& e : g.entries()) out.append(synth_gadget(e, g.n_qubits(), shape));
  return out;
}

// ---------------------------------------------------------------- text

std::string to_text(const NormalForm& nf) {
  std::string s = to_text(nf.gadgets);
  for (const auto& c : nf.tail.cnots()) {
    s += "cnot " + std::to_string(c.control) + ' ' + std::to_string(c.target) + '\n';
  }
  return s;
}

namespace {

std::size_t parse_size(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "invalid integer '" + tok + "'");
  }
  return v;
}

}  // namespace

NormalForm parse_normal_form(std::string_view text) {
  std::optional<NormalForm> nf;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    std::string kw = tok[0];
    std::transform(kw.begin(), kw.end(), kw.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (kw == "qubits") {
      if (nf) throw ParseError(line_no, "duplicate 'qubits' declaration");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'qubits <n>'");
      const std::size_t n = parse_size(tok[1], line_no);
      if (n == 0) throw ParseError(line_no, "qubit count must be positive");
      nf.emplace(NormalForm{GadgetCircuit(n), CnotCircuit(n)});
      continue;
    }
    if (!nf) throw ParseError(line_no, "'qubits <n>' must come first");
    const std::size_t n = nf->gadgets.n_qubits();
    if (kw == "zgadget" || kw == "xgadget") {
      if (!nf->tail.empty()) throw ParseError(line_no, "gadgets must precede the CNOT tail");
      if (tok.size() != 3) throw ParseError(line_no, "expected '" + kw + " <angle> <bits>'");
      double angle = 0.0;
      auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), angle);
      if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size() || !std::isfinite(angle)) {
        throw ParseError(line_no, "invalid angle '" + tok[1] + "'");
      }
      if (tok[2].size() != n) {
        throw ParseError(line_no, "bit string must have " + std::to_string(n) + " characters");
      }
      BitVec legs;
      try {
        legs = BitVec::from_string(tok[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      nf->gadgets.add(kw == "zgadget" ? Basis::Z : Basis::X, angle, std::move(legs));
    } else if (kw == "cnot") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'cnot <control> <target>'");
      const std::size_t c = parse_size(tok[1], line_no);
      const std::size_t t = parse_size(tok[2], line_no);
      if (c >= n || t >= n) throw ParseError(line_no, "qubit out of range");
      if (c == t) throw ParseError(line_no, "CNOT control equals target");
      nf->tail.add(c, t);
    } else {
      throw ParseError(line_no, "unknown instruction '" + tok[0] + "'");
    }
  }
  if (!nf) throw ParseError(line_no, "missing 'qubits <n>' declaration");
  return std::move(*nf);
}

}  // namespace gadgetopt
