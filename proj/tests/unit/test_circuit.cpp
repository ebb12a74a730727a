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

#include "catch_amalgamated.hpp"
#include "gadgetopt/circuit.hpp"
#include "helpers.hpp"

using namespace gadgetopt;

TEST_CASE("parse simple circuits") {
  const GateCircuit c = parse_circuit("qubits 2\ncnot 0 1\n");
  REQUIRE(c.n_qubits() == 2);
  REQUIRE(c.size() == 1);
  CHECK(c.gates()[0] == Gate::cnot(0, 1));

  const GateCircuit r = parse_circuit("qubits 1\nrz 1.5707963267948966 0");
  REQUIRE(r.size() == 1);
  CHECK(r.gates()[0].kind == GateKind::RZ);
  CHECK(r.gates()[0].angle == kPi / 2);
}

TEST_CASE("parser accepts comments, blank lines and any keyword case") {
  const GateCircuit c = parse_circuit(
      "# header\n"
      "QUBITS 3\n"
      "\n"
      "  H 0   # trailing comment\n"
      "Crz -0.25 2 1\n"
      "cU1 1e-3 0 2\n");
  REQUIRE(c.size() == 3);
  CHECK(c.gates()[0] == Gate::h(0));
  CHECK(c.gates()[1] == Gate::crz(-0.25, 2, 1));
  CHECK(c.gates()[2] == Gate::cu1(1e-3, 0, 2));
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("qubits 2\ncnot 0 2") == 2);
  CHECK(line_of("qubits 2\n\ncnot 1 1") == 3);
  CHECK(line_of("qubits 2\nrz nan 0") == 2);
  CHECK(line_of("qubits 2\nrz inf 0") == 2);
  CHECK(line_of("qubits 2\nfoo 0") == 2);
  CHECK(line_of("qubits 2\nrz 0.5") == 2);
  CHECK(line_of("qubits 2\nrz 0.5 0 1") == 2);
  CHECK(line_of("qubits 2\nrz 0.5x 0") == 2);
  CHECK(line_of("cnot 0 1") == 1);
  CHECK(line_of("qubits 2\nqubits 3") == 2);
  CHECK(line_of("qubits two") == 1);
}

TEST_CASE("GateCircuit::add validates") {
  GateCircuit c(2);
  CHECK_THROWS_AS(c.add(Gate::cnot(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(c.add(Gate::rz(0.1, 2)), std::out_of_range);
  CHECK_THROWS_AS(c.add(Gate::rz(std::numeric_limits<double>::infinity(), 0)),
                  std::invalid_argument);
}

TEST_CASE("text serialization round-trips") {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const GateCircuit c = testing::random_rich_circuit(rng, 2 + rng.below(5), rng.below(30));
    CHECK(parse_circuit(to_text(c)) == c);
  }
  CHECK(to_text(parse_circuit("qubits 2\ncnot 0 1\nrz 0.5 1\n")) == "qubits 2\ncnot 0 1\nrz 0.5 1\n");
}

TEST_CASE("format_angle is shortest round-trip") {
  CHECK(format_angle(0.5) == "0.5");
  CHECK(format_angle(-2.0) == "-2");
  CHECK(std::stod(format_angle(kPi)) == kPi);
}

TEST_CASE("cnot count and depth") {
  CHECK(cnot_count(GateCircuit(3)) == 0);
  CHECK(cnot_depth(GateCircuit(3)) == 0);

  GateCircuit disjoint(4);
  disjoint.add(Gate::cnot(0, 1)).add(Gate::cnot(2, 3));
  CHECK(cnot_count(disjoint) == 2);
  CHECK(cnot_depth(disjoint) == 1);

  GateCircuit chain(3);
  chain.add(Gate::cnot(0, 1)).add(Gate::cnot(1, 2));
  CHECK(cnot_count(chain) == 2);
  CHECK(cnot_depth(chain) == 2);

  // A rotation between two otherwise parallel CNOTs pushes the second later.
  GateCircuit pushed(3);
  pushed.add(Gate::cnot(0, 1)).add(Gate::rz(0.3, 2)).add(Gate::cnot(1, 2));
  CHECK(cnot_depth(pushed) == 2);

  // Rotation-only layers are not counted.
  GateCircuit rotations(2);
  rotations.add(Gate::rz(0.1, 0)).add(Gate::rz(0.1, 0)).add(Gate::cnot(0, 1));
  CHECK(cnot_depth(rotations) == 1);
}

TEST_CASE("cnot depth never exceeds count; equal when every CNOT shares a qubit") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const GateCircuit c = testing::random_basis_circuit(rng, 2 + rng.below(6), rng.below(40));
    CHECK(cnot_depth(c) <= cnot_count(c));
  }
  GateCircuit star(5);
  for (Qubit q = 1; q < 5; ++q) star.add(Gate::cnot(0, q));
  CHECK(cnot_depth(star) == cnot_count(star));
}

TEST_CASE("is_basis_circuit") {
  GateCircuit c(2);
  c.add(Gate::cnot(0, 1)).add(Gate::rx(0.1, 0));
  CHECK(is_basis_circuit(c));
  c.add(Gate::h(0));
  CHECK_FALSE(is_basis_circuit(c));
}
