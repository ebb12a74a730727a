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

// End-to-end acceptance checks AC1..AC8. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fails. All tolerances and budgets are
// fixed below.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "bench.hpp"
#include "gadgetopt/angles.hpp"
#include "gadgetopt/anneal.hpp"
#include "gadgetopt/ansatz.hpp"
#include "gadgetopt/bit_matrix.hpp"
#include "gadgetopt/circuit.hpp"
#include "gadgetopt/gadget.hpp"
#include "gadgetopt/normal_form.hpp"
#include "gadgetopt/oracle.hpp"
#include "gadgetopt/pipeline.hpp"
#include "gadgetopt/random.hpp"

using namespace gadgetopt;

namespace {

constexpr double kUnitaryTol = 1e-9;
constexpr double kCommuteTol = 1e-9;
constexpr double kNonCommuteGap = 1e-3;
constexpr double kMinDepthSaving = 40.0;

constexpr double kBudgetAc1 = 1.0;
constexpr double kBudgetAc2 = 5.0;
constexpr double kBudgetAc3 = 120.0;
constexpr double kBudgetAc7 = 600.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool run_criterion(const char* id, const char* title, double budget,
                   const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = seconds_since(start);
  if (budget > 0.0 && elapsed >= budget) {
    o.pass = false;
    o.detail += " over budget";
  }
  std::printf("%s %s %s: %s (%.2f s", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(),
              elapsed);
  if (budget > 0.0) std::printf(" of %.0f s", budget);
  std::printf(")\n");
  std::fflush(stdout);
  return o.pass;
}

double random_angle(Rng& rng) { return (2.0 * rng.uniform01() - 1.0) * kPi; }

std::pair<Qubit, Qubit> random_pair(Rng& rng, std::size_t n) {
  const Qubit a = rng.below(n);
  Qubit b = rng.below(n - 1);
  if (b >= a) ++b;
  return {a, b};
}

BitVec random_nonzero(Rng& rng, std::size_t n) {
  BitVec v(n);
  while (!v.any()) {
    for (std::size_t q = 0; q < n; ++q) v.set(q, rng.coin());
  }
  return v;
}

GateCircuit random_rich_circuit(Rng& rng, std::size_t n, std::size_t gates) {
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

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------- AC1

Outcome ac1() {
  GadgetCircuit g(3);
  g.add(Basis::Z, 0.1, BitVec::from_string("110"));
  g.add(Basis::X, 0.2, BitVec::from_string("111"));
  g.add(Basis::X, 0.3, BitVec::from_string("110"));
  g.add(Basis::Z, 0.4, BitVec::from_string("100"));
  g.add(Basis::Z, 0.5, BitVec::from_string("110"));
  const LegMatrices m = leg_matrices(g);
  const BitMatrix lz{{1, 1, 1}, {1, 0, 1}, {0, 0, 0}};
  const BitMatrix lx{{1, 1}, {1, 1}, {1, 0}};
  if (m.lz != lz || m.lx != lx) return {false, "leg matrices differ"};

  const std::size_t e0 = energy(BitMatrix::identity(3), lz, lx);
  if (e0 != 10) return {false, "energy(I) = " + std::to_string(e0)};

  std::size_t optimum = e0;
  std::size_t group_order = 0;
  for (std::uint32_t code = 0; code < (1U << 9); ++code) {
    BitMatrix c(3, 3);
    for (std::size_t k = 0; k < 9; ++k) c.set(k / 3, k % 3, ((code >> k) & 1U) != 0);
    if (!is_invertible(c)) continue;
    ++group_order;
    optimum = std::min(optimum, energy(c, lz, lx));
  }
  if (group_order != 168) return {false, "GL(3,2) enumeration has " + std::to_string(group_order)};

  const AnnealResult r = anneal(lz, lx, default_anneal_params(lz, lx));
  const bool ok = r.best_energy <= 6 && r.best_energy == optimum &&
                  energy(r.best_c, lz, lx) == r.best_energy;
  return {ok, "energy(I)=10 anneal=" + std::to_string(r.best_energy) +
                  " exhaustive=" + std::to_string(optimum) + " over 168 matrices"};
}

// ---------------------------------------------------------------- AC2

Outcome ac2() {
  Rng rng(2);
  std::size_t failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.below(7);
    CnotCircuit c(n);
    const std::size_t gates = rng.below(4 * n * n + 1);
    for (std::size_t k = 0; k < gates; ++k) {
      const auto [a, b] = random_pair(rng, n);
      c.add(a, b);
    }
    if (h_x(c) != inverse_transpose(h_z(c))) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures in 1000 circuits"};
}

// ---------------------------------------------------------------- AC3

Outcome ac3() {
  Rng rng(3);
  std::size_t failures = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    const GateCircuit lowered = lower_to_basis(random_rich_circuit(rng, n, rng.below(41)));
    OptimizeOptions options;
    options.seed = rng.next();
    options.verify = false;
    const OptimizeResult r = optimize(lowered, options);
    const PhaseComparison cmp = compare_up_to_phase(
        unitary_of_circuit(lowered), unitary_of_circuit(r.circuit), kUnitaryTol);
    worst = std::max(worst, cmp.max_error);
    if (!cmp.equal || !is_basis_circuit(r.circuit)) ++failures;
  }
  return {failures == 0,
          std::to_string(failures) + " failures in 200 circuits, max error " + fmt(worst)};
}

// ---------------------------------------------------------------- AC4

Outcome ac4() {
  Rng rng(4);
  // Angles stay away from multiples of 2 pi so non-commuting pairs have a
  // commutator norm of at least 2 sin^2(0.05).
  const auto angle = [&rng] { return 0.1 + rng.uniform01() * (2.0 * kPi - 0.2); };
  std::size_t failures = 0;
  double max_commuting = 0.0;
  double min_noncommuting = INFINITY;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const GadgetEntry a{rng.coin() ? Basis::Z : Basis::X, angle(), random_nonzero(rng, n)};
    const GadgetEntry b{rng.coin() ? Basis::Z : Basis::X, angle(), random_nonzero(rng, n)};
    const Unitary ua = unitary_of_gadget(a, n);
    const Unitary ub = unitary_of_gadget(b, n);
    const double norm = (ua * ub - ub * ua).cwiseAbs().maxCoeff();
    if (commutes(a, b)) {
      max_commuting = std::max(max_commuting, norm);
      if (!(norm < kCommuteTol)) ++failures;
    } else {
      min_noncommuting = std::min(min_noncommuting, norm);
      if (!(norm > kNonCommuteGap)) ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " failures in 500 pairs, commuting max " +
                             fmt(max_commuting) + ", non-commuting min " +
                             fmt(min_noncommuting)};
}

// ---------------------------------------------------------------- AC5

Outcome ac5() {
  const BitMatrix a1{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  const BitMatrix a2{{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const BitMatrix a3{{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  const BitMatrix expected[] = {a1, a2, a3};

  // The RZ layer behind k staircase layers carries the columns of A^k.
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto c =
        std::get<GateCircuit>(generate({AnsatzKind::Staircase, 4, k, 0, 0, false}));
    const LegMatrices m = leg_matrices(extract(c).gadgets);
    std::vector<BitVec> last;
    for (std::size_t q = 0; q < 4; ++q) last.push_back(m.lz.column(4 * (k - 1) + q));
    if (BitMatrix::from_columns(4, last) != expected[k - 1]) {
      return {false, "layer " + std::to_string(k) + " action differs"};
    }
    if (mat_pow(h_z(staircase_layer(4)), k) != expected[k - 1]) {
      return {false, "A^" + std::to_string(k) + " differs"};
    }
  }
  const std::size_t period = mppp_period(staircase_layer(4));
  if (period != 4) return {false, "period " + std::to_string(period)};

  Rng rng(5);
  std::size_t failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(16);
    BitMatrix b = BitMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) b.set(i, j, rng.coin());
    }
    if (mat_pow(b, std::bit_ceil(n)) != BitMatrix::identity(n)) ++failures;
  }
  return {failures == 0,
          "A^1..A^3 match, period 4, " + std::to_string(failures) + " failures in 1000 B"};
}

// ---------------------------------------------------------------- AC6

Outcome ac6() {
  Rng rng(6);
  std::size_t failures = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double a1 = random_angle(rng);
    const double a2 = random_angle(rng);
    const double a3 = random_angle(rng);
    const EulerAngles b = euler_xzx_to_zxz(a1, a2, a3);
    GateCircuit xzx(1);
    xzx.add(Gate::rx(a1, 0)).add(Gate::rz(a2, 0)).add(Gate::rx(a3, 0));
    GateCircuit zxz(1);
    zxz.add(Gate::rz(b.b1, 0)).add(Gate::rx(b.b2, 0)).add(Gate::rz(b.b3, 0));
    const PhaseComparison cmp =
        compare_up_to_phase(unitary_of_circuit(xzx), unitary_of_circuit(zxz), kUnitaryTol);
    worst = std::max(worst, cmp.max_error);
    if (!cmp.equal) ++failures;
  }
  return {failures == 0,
          std::to_string(failures) + " failures in 1000 triples, max error " + fmt(worst)};
}

// ---------------------------------------------------------------- AC7

Outcome ac7() {
  cli::BenchConfig config;
  config.n_qubits = 8;
  config.gadgets_per_layer = {10};
  config.layers = {1, 2, 5, 10};
  config.samples_per_cell = 10;
  const auto cells = cli::run_bench(config);
  const auto rows = cli::summarize(config, cells);
  bool ok = true;
  std::string detail = "depth savings";
  double previous = -INFINITY;
  for (const auto& row : rows) {
    const double s = row.depth_saving();
    detail += " L" + std::to_string(row.layers) + "=" + fmt(s) + "%";
    if (s < previous) ok = false;
    previous = s;
  }
  if (rows.empty() || rows.back().depth_saving() < kMinDepthSaving) ok = false;
  for (const auto& cell : cells) {
    if (cell.report.verified != Verification::Yes) {
      ok = false;
      detail += " unverified cell";
      break;
    }
  }
  return {ok, detail};
}

// ---------------------------------------------------------------- AC8

Unitary printed_matrix(GateKind kind, double t) {
  using C = std::complex<double>;
  const C i{0.0, 1.0};
  Unitary u = Unitary::Identity(4, 4);
  switch (kind) {
    case GateKind::CU1:
      u(3, 3) = std::exp(i * t);
      break;
    case GateKind::CRZ:
      u(2, 2) = std::exp(-i * t / 2.0);
      u(3, 3) = std::exp(i * t / 2.0);
      break;
    case GateKind::CRX:
      u(2, 2) = u(3, 3) = std::cos(t / 2.0);
      u(2, 3) = u(3, 2) = -i * std::sin(t / 2.0);
      break;
    default:
      throw std::logic_error("no printed matrix");
  }
  return u;
}

Outcome ac8() {
  Rng rng(8);
  std::size_t failures = 0;
  double worst = 0.0;
  for (GateKind kind : {GateKind::CU1, GateKind::CRZ, GateKind::CRX}) {
    for (int trial = 0; trial < 50; ++trial) {
      const double t = random_angle(rng);
      // Control on qubit 0, the most significant index bit.
      const Gate g{kind, t, {0, 1}};
      GateCircuit lowered(2);
      for (const Gate& x : lower_gate(g)) lowered.add(x);
      const PhaseComparison cmp =
          compare_up_to_phase(unitary_of_circuit(lowered), printed_matrix(kind, t), kUnitaryTol);
      worst = std::max(worst, cmp.max_error);
      if (!cmp.equal || !is_basis_circuit(lowered)) ++failures;
    }
  }
  return {failures == 0,
          std::to_string(failures) + " failures in 150 conversions, max error " + fmt(worst)};
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion("AC1", "worked example", kBudgetAc1, ac1);
  ok &= run_criterion("AC2", "inverse transpose", kBudgetAc2, ac2);
  ok &= run_criterion("AC3", "semantic preservation", kBudgetAc3, ac3);
  ok &= run_criterion("AC4", "commutation", 0.0, ac4);
  ok &= run_criterion("AC5", "periodicity", 0.0, ac5);
  ok &= run_criterion("AC6", "euler decomposition", 0.0, ac6);
  ok &= run_criterion("AC7", "benchmark trend", kBudgetAc7, ac7);
  ok &= run_criterion("AC8", "gate conversion", 0.0, ac8);
  return ok ? 0 : 1;
}
