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

#include <bit>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace coalfe {

// A coalition is a subset of the N agents encoded as a bit mask: bit i set
// means agent i belongs. Masks double as indices into the dense 2^N tables.
using Mask = std::uint32_t;

// Dense lattice tables above this agent count would exceed ~128 MB.
inline constexpr int kMaxDenseAgents = 24;

inline int coalition_size(Mask mask) { return std::popcount(mask); }

// Characteristic function v on the subset lattice, v(empty) = 0.
struct ValueTable {
  int n_agents = 0;
  std::vector<double> values;  // values[mask] = v(coalition(mask))

  ValueTable() = default;
  explicit ValueTable(int n);               // all-zero table
  ValueTable(int n, std::vector<double> v); // validates invariants
};

// Harsanyi dividends of a value function: v(S) = sum over B subset S of
// dividends[B]. dividends[0] = 0.
struct DividendTable {
  int n_agents = 0;
  std::vector<double> dividends;

  DividendTable() = default;
  explicit DividendTable(int n);
  DividendTable(int n, std::vector<double> d);
};

// Per-agent Shapley values eta_i.
struct ShapleyVector {
  int n_agents = 0;
  std::vector<double> eta;
};

enum class SynergyLabel : std::uint8_t { antagonistic, neutral, synergistic };

std::string_view to_string(SynergyLabel label);

// Mobius inversion of v on the subset lattice: dividends[B] =
// sum over A subset B of (-1)^(|B|-|A|) v(A), computed by the in-place
// per-bit fast transform in O(N 2^N).
DividendTable harsanyi_dividends(const ValueTable& v);

// Inverse (fast zeta transform): v(S) = sum over B subset S of dividends[B].
ValueTable reconstruct_values(const DividendTable& d);

// eta_i = sum over coalitions B containing i of dividends[B] / |B|.
// Satisfies efficiency: sum_i eta_i = v(grand coalition).
ShapleyVector shapley_from_dividends(const DividendTable& d);

// Unbiased permutation-sampling estimate of the Shapley vector for games too
// large to tabulate. The oracle maps a coalition mask to its value;
// deterministic for a fixed seed.
ShapleyVector shapley_monte_carlo(const std::function<double(Mask)>& value,
                                  int n_agents, int n_permutations,
                                  std::uint64_t seed);

// Keeps dividends of order <= max_order, zeroes the rest. max_order = 2
// leaves the Ising-form energy: fields (singletons) and couplings (pairs).
DividendTable truncate_dividends(const DividendTable& d, int max_order);

// Sign classification per coalition: synergistic (> tol), antagonistic
// (< -tol), neutral otherwise. These are dividends of the value function;
// dividends of the energy E = -v carry the opposite sign.
std::vector<SynergyLabel> classify_synergy(const DividendTable& d,
                                           double tol = 1e-9);

}  // namespace coalfe
