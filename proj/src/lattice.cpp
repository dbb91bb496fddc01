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

#include "coalfe/lattice.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coalfe/rng.hpp"

namespace coalfe {

namespace {

void check_agent_count(int n) {
  if (n < 1 || n > kMaxDenseAgents) {
    throw std::invalid_argument("agent count " + std::to_string(n) +
                                " outside [1, " +
                                std::to_string(kMaxDenseAgents) + "]");
  }
}

void check_table(int n, const std::vector<double>& entries, bool zero_at_empty,
                 const char* what) {
  check_agent_count(n);
  const std::size_t want = std::size_t{1} << n;
  if (entries.size() != want) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(want) + " entries, got " +
                                std::to_string(entries.size()));
  }
  for (const double x : entries) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
  if (zero_at_empty && entries[0] != 0.0) {
    throw std::invalid_argument(std::string(what) +
                                ": empty coalition must map to 0");
  }
}

}  // namespace

ValueTable::ValueTable(int n) : n_agents(n) {
  check_agent_count(n);
  values.assign(std::size_t{1} << n, 0.0);
}

ValueTable::ValueTable(int n, std::vector<double> v)
    : n_agents(n), values(std::move(v)) {
  check_table(n_agents, values, /*zero_at_empty=*/true, "ValueTable");
}

DividendTable::DividendTable(int n) : n_agents(n) {
  check_agent_count(n);
  dividends.assign(std::size_t{1} << n, 0.0);
}

DividendTable::DividendTable(int n, std::vector<double> d)
    : n_agents(n), dividends(std::move(d)) {
  check_table(n_agents, dividends, /*zero_at_empty=*/true, "DividendTable");
}

std::string_view to_string(SynergyLabel label) {
  switch (label) {
    case SynergyLabel::antagonistic:
      return "antagonistic";
    case SynergyLabel::neutral:
      return "neutral";
    case SynergyLabel::synergistic:
      return "synergistic";
  }
  return "neutral";
}

DividendTable harsanyi_dividends(const ValueTable& v) {
  DividendTable out(v.n_agents);
  out.dividends = v.values;
  auto& f = out.dividends;
  const std::size_t size = f.size();
  // Fast Mobius transform: one subtraction sweep per bit.
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & bit) f[mask] -= f[mask ^ bit];
    }
  }
  return out;
}

ValueTable reconstruct_values(const DividendTable& d) {
  ValueTable out(d.n_agents);
  out.values = d.dividends;
  auto& f = out.values;
  const std::size_t size = f.size();
  // Fast zeta transform (subset sums), the exact inverse of the above.
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & bit) f[mask] += f[mask ^ bit];
    }
  }
  return out;
}

ShapleyVector shapley_from_dividends(const DividendTable& d) {
  ShapleyVector out;
  out.n_agents = d.n_agents;
  out.eta.assign(static_cast<std::size_t>(d.n_agents), 0.0);
  const std::size_t size = d.dividends.size();
  for (std::size_t mask = 1; mask < size; ++mask) {
    const double share =
        d.dividends[mask] / coalition_size(static_cast<Mask>(mask));
    Mask m = static_cast<Mask>(mask);
    while (m != 0) {
      const int agent = std::countr_zero(m);
      out.eta[static_cast<std::size_t>(agent)] += share;
      m &= m - 1;
    }
  }
  return out;
}

ShapleyVector shapley_monte_carlo(const std::function<double(Mask)>& value,
                                  int n_agents, int n_permutations,
                                  std::uint64_t seed) {
  if (n_agents < 1 || n_agents > 31) {
    throw std::invalid_argument("shapley_monte_carlo: bad agent count");
  }
  if (n_permutations < 1) {
    throw std::invalid_argument("shapley_monte_carlo: need >= 1 permutation");
  }
  ShapleyVector out;
  out.n_agents = n_agents;
  out.eta.assign(static_cast<std::size_t>(n_agents), 0.0);

  std::vector<int> order(static_cast<std::size_t>(n_agents));
  std::iota(order.begin(), order.end(), 0);
  rng::SplitMix64 stream(rng::mix64(seed ^ rng::kGolden));
  for (int p = 0; p < n_permutations; ++p) {
    stream.shuffle(order);
    Mask built = 0;
    double prev = value(built);
    for (const int agent : order) {
      built |= Mask{1} << agent;
      const double cur = value(built);
      out.eta[static_cast<std::size_t>(agent)] += cur - prev;
      prev = cur;
    }
  }
  for (double& e : out.eta) e /= n_permutations;
  return out;
}

DividendTable truncate_dividends(const DividendTable& d, int max_order) {
  if (max_order < 1 || max_order > d.n_agents) {
    throw std::invalid_argument("truncate_dividends: max_order outside [1, N]");
  }
  DividendTable out = d;
  for (std::size_t mask = 0; mask < out.dividends.size(); ++mask) {
    if (coalition_size(static_cast<Mask>(mask)) > max_order) {
      out.dividends[mask] = 0.0;
    }
  }
  return out;
}

std::vector<SynergyLabel> classify_synergy(const DividendTable& d,
                                           double tol) {
  if (tol < 0.0) {
    throw std::invalid_argument("classify_synergy: tol must be >= 0");
  }
  std::vector<SynergyLabel> labels(d.dividends.size(), SynergyLabel::neutral);
  for (std::size_t mask = 0; mask < d.dividends.size(); ++mask) {
    const double delta = d.dividends[mask];
    if (delta > tol) {
      labels[mask] = SynergyLabel::synergistic;
    } else if (delta < -tol) {
      labels[mask] = SynergyLabel::antagonistic;
    }
  }
  return labels;
}

}  // namespace coalfe
