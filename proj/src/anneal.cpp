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

#include "gadgetopt/anneal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gadgetopt {

void AnnealParams::validate() const {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw std::invalid_argument("t0 must be positive");
  if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  if (attempts < 1) throw std::invalid_argument("attempts must be at least 1");
}

AnnealParams default_anneal_params(const BitMatrix& lz, const BitMatrix& lx,
                                   std::uint64_t seed) {
  AnnealParams p;
  p.t0 = static_cast<double>(std::max<std::size_t>(5, popcount(lz) + popcount(lx))) / 10.0;
  p.iterations = 5000;
  p.attempts = 20;
  p.seed = seed;
  return p;
}

std::size_t energy(const BitMatrix& c, const BitMatrix& lz, const BitMatrix& lx) {
  return popcount(mat_mul(c, lz)) + popcount(mat_mul(inverse_transpose(c), lx));
}

namespace {

std::size_t count(std::span<const std::uint64_t> words) {
  std::size_t n = 0;
  for (auto w : words) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t count_xor(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return n;
}

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

struct Flip {
  std::size_t row;
  std::size_t col;
};

// Flipping c(i, j) keeps c invertible iff c^-1(j, i) == 0 (rank-one update
// over GF(2)). Samples uniformly among the valid flips by rejection.
Flip draw_flip(const BitMatrix& c_inv, Rng& rng) {
  const std::size_t n = c_inv.rows();
  for (;;) {
    const std::size_t i = rng.below(n);
    const std::size_t j = rng.below(n);
    if (!c_inv.get(j, i)) return {i, j};
  }
}

/**
 * One annealing chain. Keeps c, c^-1, c * lz and (c^T)^-1 * lx in sync so a
 * proposal costs O(n) row operations instead of an inversion.
 */
class Chain {
 public:
  Chain(BitMatrix c, const BitMatrix& lz, const BitMatrix& lx)
      : lz_(lz), lx_(lx), c_(std::move(c)), c_inv_(invert(c_)),
        z_legs_(mat_mul(c_, lz)), x_legs_(mat_mul(c_inv_.transpose(), lx)),
        energy_(popcount(z_legs_) + popcount(x_legs_)), x_delta_(lx.cols()) {}

  std::size_t energy() const { return energy_; }
  const BitMatrix& matrix() const { return c_; }

  /** Energy change if c(i, j) were flipped; also caches the X-side row delta. */
  long long delta(const Flip& f) {
    const std::size_t n = c_.rows();
    long long d = static_cast<long long>(count_xor(z_legs_.row_words(f.row), lz_.row_words(f.col))) -
                  static_cast<long long>(count(z_legs_.row_words(f.row)));
    // (c'^T)^-1 = (c^T)^-1 + b a^T with a = column i and b = row j of c^-1,
    // so every row m with b_m = 1 gains a^T lx.
    auto r = x_delta_.words();
    std::fill(r.begin(), r.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (c_inv_.get(k, f.row)) xor_into(r, lx_.row_words(k));
    }
    for (std::size_t m = 0; m < n; ++m) {
      if (!c_inv_.get(f.col, m)) continue;
      d += static_cast<long long>(count_xor(x_legs_.row_words(m), r)) -
           static_cast<long long>(count(x_legs_.row_words(m)));
    }
    return d;
  }

  /** Applies the flip whose delta() was computed last. */
  void commit(const Flip& f, long long d) {
    const std::size_t n = c_.rows();
    const BitVec a = c_inv_.column(f.row);
    const BitVec b = c_inv_.row(f.col);
    c_.flip(f.row, f.col);
    xor_into(z_legs_.row_words(f.row), lz_.row_words(f.col));
    for (std::size_t m = 0; m < n; ++m) {
      if (b.get(m)) xor_into(x_legs_.row_words(m), x_delta_.words());
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (a.get(k)) xor_into(c_inv_.row_words(k), b.words());
    }
    energy_ = static_cast<std::size_t>(static_cast<long long>(energy_) + d);
  }

  const BitMatrix& inverse() const { return c_inv_; }

 private:
  const BitMatrix& lz_;
  const BitMatrix& lx_;
  BitMatrix c_;
  BitMatrix c_inv_;
  BitMatrix z_legs_;
  BitMatrix x_legs_;
  std::size_t energy_;
  BitVec x_delta_;
};

}  // namespace

BitMatrix neighbor(const BitMatrix& c, Rng& rng) {
  if (!c.is_square()) throw DimensionMismatch("neighbor: matrix is not square");
  if (c.rows() <= 1) return c;
  const Flip f = draw_flip(invert(c), rng);
  BitMatrix out = c;
  out.flip(f.row, f.col);
  return out;
}

AnnealResult anneal(const BitMatrix& lz, const BitMatrix& lx, const AnnealParams& params) {
  params.validate();
  if (lz.rows() != lx.rows()) throw DimensionMismatch("L_Z and L_X row counts differ");
  const std::size_t n = lz.rows();
  if (n == 0) throw std::invalid_argument("anneal: at least one qubit is required");

  AnnealResult result;
  result.best_c = BitMatrix::identity(n);
  result.initial_energy = popcount(lz) + popcount(lx);
  result.best_energy = result.initial_energy;

  const auto iterations = static_cast<double>(params.iterations);
  for (std::size_t attempt = 0; attempt < params.attempts; ++attempt) {
    Rng rng(Rng::derive(params.seed, {attempt}));
    Chain chain(random_invertible(n, rng), lz, lx);
    BitMatrix best = chain.matrix();
    std::size_t best_energy = chain.energy();
    for (std::size_t k = 0; k < params.iterations && n > 1; ++k) {
      const double temperature = params.t0 * (1.0 - static_cast<double>(k) / iterations);
      const Flip f = draw_flip(chain.inverse(), rng);
      const long long d = chain.delta(f);
      bool accept = d <= 0;
      if (!accept && temperature > 0.0) {
        accept = rng.uniform01() < std::exp(-static_cast<double>(d) / temperature);
      }
      if (!accept) continue;
      chain.commit(f, d);
      if (chain.energy() < best_energy) {
        best_energy = chain.energy();
        best = chain.matrix();
      }
    }
    result.per_attempt_energies.push_back(best_energy);
    if (best_energy < result.best_energy) {
      result.best_energy = best_energy;
      result.best_c = std::move(best);
    }
  }
  return result;
}

}  // namespace gadgetopt
