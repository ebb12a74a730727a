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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace gadgetopt {

/**
 * Seedable generator with platform-independent sampling helpers.
 *
 * std::uniform_*_distribution is implementation-defined, so bounded integers
 * and reals are derived from raw mt19937_64 output here to keep every run
 * byte-identical across standard libraries.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /** Seed derived from a master seed and a list of stream indices. */
  static std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) {
    std::vector<std::uint32_t> material{static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
    for (auto s : stream) {
      material.push_back(static_cast<std::uint32_t>(s));
      material.push_back(static_cast<std::uint32_t>(s >> 32));
    }
    std::seed_seq seq(material.begin(), material.end());
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (std::uint64_t{out[1]} << 32) | out[0];
  }

  std::uint64_t next() { return engine_(); }

  /** Uniform integer in [0, bound); bound must be positive. */
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /** Uniform real in [0, 1). */
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gadgetopt
