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

#include "gadgetopt/oracle.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <complex>

namespace gadgetopt {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

void check_size(std::size_t n) {
  if (n > kMaxOracleQubits) {
    throw OracleTooLarge("oracle supports at most " + std::to_string(kMaxOracleQubits) +
                         " qubits, got " + std::to_string(n));
  }
}

std::size_t bit_of(Qubit q, std::size_t n) { return n - 1 - q; }

Eigen::Matrix2cd rz_matrix(double t) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(-kI * (t / 2));
  m(1, 1) = std::exp(kI * (t / 2));
  return m;
}

Eigen::Matrix2cd rx_matrix(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), -kI * std::sin(t / 2), -kI * std::sin(t / 2), std::cos(t / 2);
  return m;
}

Eigen::Matrix2cd ry_matrix(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

Eigen::Matrix2cd h_matrix() {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

// Left-multiplies u by a 2x2 gate on qubit q.
void apply_1q(Unitary& u, const Eigen::Matrix2cd& g, Qubit q, std::size_t n) {
  const std::size_t mask = std::size_t{1} << bit_of(q, n);
  const auto dim = static_cast<std::size_t>(u.rows());
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const std::size_t j = i | mask;
    const auto ii = static_cast<Eigen::Index>(i);
    const auto jj = static_cast<Eigen::Index>(j);
    Eigen::RowVectorXcd ri = u.row(ii);
    Eigen::RowVectorXcd rj = u.row(jj);
    u.row(ii) = g(0, 0) * ri + g(0, 1) * rj;
    u.row(jj) = g(1, 0) * ri + g(1, 1) * rj;
  }
}

// Left-multiplies u by a 4x4 gate whose local index is 2 * bit(a) + bit(b).
void apply_2q(Unitary& u, const Eigen::Matrix4cd& g, Qubit a, Qubit b, std::size_t n) {
  const std::size_t ma = std::size_t{1} << bit_of(a, n);
  const std::size_t mb = std::size_t{1} << bit_of(b, n);
  const auto dim = static_cast<std::size_t>(u.rows());
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & (ma | mb)) continue;
    const std::array<Eigen::Index, 4> idx{
        static_cast<Eigen::Index>(base), static_cast<Eigen::Index>(base | mb),
        static_cast<Eigen::Index>(base | ma), static_cast<Eigen::Index>(base | ma | mb)};
    std::array<Eigen::RowVectorXcd, 4> rows;
    for (std::size_t k = 0; k < 4; ++k) rows[k] = u.row(idx[k]);
    for (std::size_t r = 0; r < 4; ++r) {
      Eigen::RowVectorXcd acc = Eigen::RowVectorXcd::Zero(u.cols());
      for (std::size_t k = 0; k < 4; ++k) {
        const cd coeff = g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k));
        if (coeff != cd{0.0, 0.0}) acc += coeff * rows[k];
      }
      u.row(idx[r]) = acc;
    }
  }
}

Eigen::Matrix4cd controlled(const Eigen::Matrix2cd& g) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m.block<2, 2>(2, 2) = g;
  return m;
}

}  // namespace

Unitary gate_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::RZ:
      return rz_matrix(g.angle);
    case GateKind::RX:
      return rx_matrix(g.angle);
    case GateKind::RY:
      return ry_matrix(g.angle);
    case GateKind::H:
      return h_matrix();
    case GateKind::CNOT: {
      Eigen::Matrix2cd x;
      x << 0, 1, 1, 0;
      return controlled(x);
    }
    case GateKind::CZ: {
      Eigen::Matrix2cd z;
      z << 1, 0, 0, -1;
      return controlled(z);
    }
    case GateKind::CRZ:
      return controlled(rz_matrix(g.angle));
    case GateKind::CRX:
      return controlled(rx_matrix(g.angle));
    case GateKind::CU1: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
      m(3, 3) = std::exp(kI * g.angle);
      return m;
    }
  }
  throw std::logic_error("unknown gate kind");
}

Unitary unitary_of_circuit(const GateCircuit& c) {
  const std::size_t n = c.n_qubits();
  check_size(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Unitary u = Unitary::Identity(dim, dim);
  for (const auto& g : c.gates()) {
    if (g.arity() == 1) {
      apply_1q(u, gate_matrix(g), g.qubit(), n);
    } else {
      apply_2q(u, gate_matrix(g), g.qubits[0], g.qubits[1], n);
    }
  }
  return u;
}

Unitary unitary_of_gadget(const GadgetEntry& e, std::size_t n) {
  check_size(n);
  if (e.legs.size() != n) throw std::invalid_argument("gadget legs do not match qubit count");
  std::size_t mask = 0;
  for (auto q : e.legs.ones()) mask |= std::size_t{1} << bit_of(q, n);
  const std::size_t dim = std::size_t{1} << n;
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const bool odd = (std::popcount(i & mask) & 1) != 0;
    diag(static_cast<Eigen::Index>(i)) = std::exp(kI * (odd ? e.angle / 2 : -e.angle / 2));
  }
  Unitary u = diag.asDiagonal();
  if (e.basis == Basis::X) {
    // H^{legs} D H^{legs}; H is real symmetric so right-multiplication is the
    // transpose of a left-multiplication.
    for (auto q : e.legs.ones()) apply_1q(u, h_matrix(), q, n);
    u.transposeInPlace();
    for (auto q : e.legs.ones()) apply_1q(u, h_matrix(), q, n);
    u.transposeInPlace();
  }
  return u;
}

Unitary unitary_of_gadgets(const GadgetCircuit& g) {
  const std::size_t n = g.n_qubits();
  check_size(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Unitary u = Unitary::Identity(dim, dim);
  for (const auto& e : g.entries()) u = unitary_of_gadget(e, n) * u;
  return u;
}

bool is_unitary(const Unitary& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Unitary prod = u * u.adjoint();
  return (prod - Unitary::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < tol;
}

PhaseComparison compare_up_to_phase(const Unitary& u, const Unitary& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("compare_up_to_phase: dimension mismatch");
  }
  const Unitary overlap = v.adjoint() * u;
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  const double peak = overlap.cwiseAbs().maxCoeff(&r, &c);
  const cd phase = peak > 0.0 ? overlap(r, c) / peak : cd{1.0, 0.0};
  PhaseComparison out;
  out.max_error = (u - phase * v).cwiseAbs().maxCoeff();
  out.phase = std::arg(phase);
  out.equal = out.max_error < tol;
  return out;
}

bool equiv_up_to_phase(const Unitary& u, const Unitary& v, double tol) {
  return compare_up_to_phase(u, v, tol).equal;
}

}  // namespace gadgetopt
