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

#include "gadgetopt/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

namespace gadgetopt {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view keyword;
  bool two_qubit;
  bool parameterised;
};

constexpr std::array<KindInfo, 9> kKinds{{
    {GateKind::CNOT, "cnot", true, false},
    {GateKind::RZ, "rz", false, true},
    {GateKind::RX, "rx", false, true},
    {GateKind::RY, "ry", false, true},
    {GateKind::H, "h", false, false},
    {GateKind::CZ, "cz", true, false},
    {GateKind::CRZ, "crz", true, true},
    {GateKind::CRX, "crx", true, true},
    {GateKind::CU1, "cu1", true, true},
}};

const KindInfo& info(GateKind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> kind_from_keyword(std::string_view word) {
  for (const auto& k : kKinds) {
    if (k.keyword == word) return k.kind;
  }
  return std::nullopt;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

std::size_t parse_index(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + tok + "'");
  }
  return value;
}

double parse_angle(const std::string& tok, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    throw ParseError(line, "invalid angle '" + tok + "'");
  }
  return value;
}

}  // namespace

std::string_view gate_keyword(GateKind kind) { return info(kind).keyword; }
bool is_two_qubit(GateKind kind) { return info(kind).two_qubit; }
bool is_parameterised(GateKind kind) { return info(kind).parameterised; }

GateCircuit& GateCircuit::add(const Gate& gate) {
  for (std::size_t i = 0; i < gate.arity(); ++i) {
    if (gate.qubits[i] >= n_qubits_) {
      throw std::out_of_range("qubit " + std::to_string(gate.qubits[i]) + " out of range for " +
                              std::to_string(n_qubits_) + "-qubit circuit");
    }
  }
  if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("two-qubit gate acts twice on qubit " +
                                std::to_string(gate.qubits[0]));
  }
  if (!std::isfinite(gate.angle)) throw std::invalid_argument("gate angle is not finite");
  Gate g = gate;
  if (g.arity() == 1) g.qubits[1] = 0;
  gates_.push_back(g);
  return *this;
}

GateCircuit& GateCircuit::append(const GateCircuit& other) {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("append: qubit count mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

std::string format_angle(double angle) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, angle);
  return std::string(buf, ptr);
}

GateCircuit parse_circuit(std::string_view text) {
  std::optional<GateCircuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    std::string keyword = tokens[0];
    std::transform(keyword.begin(), keyword.end(), keyword.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    if (keyword == "qubits") {
      if (circuit) throw ParseError(line_no, "duplicate 'qubits' declaration");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'qubits <n>'");
      const std::size_t n = parse_index(tokens[1], line_no, "qubit count");
      if (n == 0) throw ParseError(line_no, "qubit count must be positive");
      circuit.emplace(n);
      continue;
    }
    auto kind = kind_from_keyword(keyword);
    if (!kind) throw ParseError(line_no, "unknown instruction '" + tokens[0] + "'");
    if (!circuit) throw ParseError(line_no, "'qubits <n>' must precede gates");

    const auto& k = info(*kind);
    const std::size_t expected = 1 + (k.parameterised ? 1 : 0) + (k.two_qubit ? 2 : 1);
    if (tokens.size() != expected) {
      throw ParseError(line_no, "'" + std::string(k.keyword) + "' expects " +
                                    std::to_string(expected - 1) + " arguments");
    }
    Gate gate;
    gate.kind = *kind;
    std::size_t arg = 1;
    if (k.parameterised) gate.angle = parse_angle(tokens[arg++], line_no);
    for (std::size_t i = 0; i < gate.arity(); ++i) {
      gate.qubits[i] = parse_index(tokens[arg++], line_no, "qubit index");
      if (gate.qubits[i] >= circuit->n_qubits()) {
        throw ParseError(line_no, "qubit " + tokens[arg - 1] + " out of range");
      }
    }
    if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
      throw ParseError(line_no, "two-qubit gate uses the same qubit twice");
    }
    circuit->add(gate);
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits <n>' declaration");
  return *circuit;
}

std::string to_text(const GateCircuit& circuit) {
  std::ostringstream os;
  os << "qubits " << circuit.n_qubits() << '\n';
  for (const auto& g : circuit.gates()) {
    os << gate_keyword(g.kind);
    if (is_parameterised(g.kind)) os << ' ' << format_angle(g.angle);
    for (std::size_t i = 0; i < g.arity(); ++i) os << ' ' << g.qubits[i];
    os << '\n';
  }
  return os.str();
}

std::size_t cnot_count(const GateCircuit& circuit) {
  return static_cast<std::size_t>(std::count_if(
      circuit.gates().begin(), circuit.gates().end(),
      [](const Gate& g) { return g.kind == GateKind::CNOT; }));
}

std::size_t cnot_depth(const GateCircuit& circuit) {
  std::vector<std::size_t> next_free(circuit.n_qubits(), 0);
  std::vector<bool> layer_has_cnot;
  for (const auto& g : circuit.gates()) {
    std::size_t layer = 0;
    for (std::size_t i = 0; i < g.arity(); ++i) layer = std::max(layer, next_free[g.qubits[i]]);
    for (std::size_t i = 0; i < g.arity(); ++i) next_free[g.qubits[i]] = layer + 1;
    if (g.kind == GateKind::CNOT) {
      if (layer_has_cnot.size() <= layer) layer_has_cnot.resize(layer + 1, false);
      layer_has_cnot[layer] = true;
    }
  }
  return static_cast<std::size_t>(std::count(layer_has_cnot.begin(), layer_has_cnot.end(), true));
}

bool is_basis_circuit(const GateCircuit& circuit) {
  return std::all_of(circuit.gates().begin(), circuit.gates().end(), [](const Gate& g) {
    return g.kind == GateKind::CNOT || g.kind == GateKind::RZ || g.kind == GateKind::RX;
  });
}

}  // namespace gadgetopt
