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

#include <complex>

#include "catch_amalgamated.hpp"
#include "gadgetopt/circuit.hpp"
#include "gadgetopt/oracle.hpp"
#include "helpers.hpp"

using namespace gadgetopt;

namespace {

using cd = std::complex<double>;

Eigen::Matrix2cd rz(double t) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, -t / 2);
  m(1, 1) = std::polar(1.0, t / 2);
  return m;
}

Eigen::Matrix2cd rx(double t) {
  const cd c{std::cos(t / 2), 0.0};
  const cd s{0.0, -std::sin(t / 2)};
  Eigen::Matrix2cd m;
  m << c, s, s, c;
  return m;
}

double phase_error(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  return compare_up_to_phase(a, b).max_error;
}

bool in_range(double x) { return x > -kPi && x <= kPi; }

}  // namespace

TEST_CASE("H lowers to three quarter-turn rotations") {
  GateCircuit c(1);
  c.add(Gate::h(0));
  const GateCircuit lowered = lower_to_basis(c);
  REQUIRE(lowered.size() == 3);
  CHECK(lowered.gates()[0] == Gate::rz(kPi / 2, 0));
  CHECK(lowered.gates()[1] == Gate::rx(kPi / 2, 0));
  CHECK(lowered.gates()[2] == Gate::rz(kPi / 2, 0));
  CHECK(equiv_up_to_phase(unitary_of_circuit(c), unitary_of_circuit(lowered)));
}

TEST_CASE("CRZ(2*theta) lowers to diag(1, 1, e^-i theta, e^i theta)") {
  const double theta = 0.7;
  GateCircuit c(2);
  c.add(Gate::crz(2 * theta, 0, 1));
  const GateCircuit lowered = lower_to_basis(c);
  CHECK(is_basis_circuit(lowered));
  Unitary expected = Unitary::Identity(4, 4);
  expected(2, 2) = std::polar(1.0, -theta);
  expected(3, 3) = std::polar(1.0, theta);
  CHECK(equiv_up_to_phase(unitary_of_circuit(lowered), expected));
}

TEST_CASE("basis circuits are unchanged by lowering") {
  Rng rng(4);
  const GateCircuit c = testing::random_basis_circuit(rng, 4, 30);
  CHECK(lower_to_basis(c) == c);
}

TEST_CASE("every gate kind lowers to an equivalent basis circuit") {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(3);
    const GateCircuit c = testing::random_rich_circuit(rng, n, 1);
    const GateCircuit lowered = lower_to_basis(c);
    INFO(to_text(c));
    CHECK(is_basis_circuit(lowered));
    CHECK(equiv_up_to_phase(unitary_of_circuit(c), unitary_of_circuit(lowered)));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const GateCircuit c = testing::random_rich_circuit(rng, 2 + rng.below(5), 25);
    CHECK(equiv_up_to_phase(unitary_of_circuit(c), unitary_of_circuit(lower_to_basis(c))));
  }
}

TEST_CASE("Euler XZX to ZXZ reconstructs the unitary") {
  auto check = [](double a1, double a2, double a3) {
    const EulerAngles e = euler_xzx_to_zxz(a1, a2, a3);
    const Eigen::Matrix2cd lhs = rz(e.b3) * rx(e.b2) * rz(e.b1);
    const Eigen::Matrix2cd rhs = rx(a3) * rz(a2) * rx(a1);
    INFO(a1 << " " << a2 << " " << a3);
    CHECK(phase_error(lhs, rhs) < 1e-9);
    CHECK(in_range(e.b1));
    CHECK(in_range(e.b2));
    CHECK(in_range(e.b3));
    // The colour-swapped identity uses the same angles.
    const Eigen::Matrix2cd dual_lhs = rx(e.b3) * rz(e.b2) * rx(e.b1);
    const Eigen::Matrix2cd dual_rhs = rz(a3) * rx(a2) * rz(a1);
    CHECK(phase_error(dual_lhs, dual_rhs) < 1e-9);
  };
  check(0.3, 0.8, -0.4);
  check(kPi / 2, kPi / 2, kPi / 2);
  check(0.0, 0.0, 0.0);
  check(kPi, 0.0, kPi);
  check(0.0, kPi, 0.0);
  check(kPi, kPi, kPi);
  check(-kPi, 1e-14, 2.0);
  Rng rng(21);
  for (int k = 0; k < 1000; ++k) {
    check(testing::random_angle(rng) * 2, testing::random_angle(rng) * 2,
          testing::random_angle(rng) * 2);
  }
}

TEST_CASE("Euler with a2 = 0 collapses to one X rotation") {
  const EulerAngles e = euler_xzx_to_zxz(0.4, 0.0, 0.9);
  CHECK(std::abs(e.b2 - 1.3) < 1e-12);
  CHECK(phase_error(rz(e.b3) * rx(e.b2) * rz(e.b1), rx(1.3)) < 1e-9);
}
