// Copyright 2026 The coalfe Authors
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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace coalfe {

// Deterministic counter-based randomness. A stream is a pure function of its
// key, so replicate (beta_index, run) draws are identical under any execution
// order or thread count.
namespace rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// splitmix64 stream seeded from an arbitrary state word.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (cosine branch). One gaussian per call;
  // hand-rolled so the byte stream does not depend on the C++ runtime's
  // distribution internals.
  double next_gaussian() {
    double u1 = next_double();
    const double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stream-separation salts for the (seed, beta_index, run) key chain; frozen
// so archived outputs stay reproducible.
inline constexpr std::uint64_t kBetaSalt = 8;
inline constexpr std::uint64_t kRunSalt = 9;

inline std::uint64_t replicate_key(std::uint64_t seed, std::uint64_t beta_index,
                                   std::uint64_t run) {
  std::uint64_t s = mix64(seed + kGolden * (beta_index + kBetaSalt));
  return mix64(s + kGolden * (run + kRunSalt));
}

// The one gaussian used for replicate noise injection.
inline double replicate_gaussian(std::uint64_t seed, std::uint64_t beta_index,
                                 std::uint64_t run) {
  SplitMix64 stream(replicate_key(seed, beta_index, run));
  return stream.next_gaussian();
}

}  // namespace rng
}  // namespace coalfe
