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
#include <span>

namespace coalfe {
namespace numeric {

// log(sum_i exp(args[i])), max-shifted so |args| up to ~1e4 cannot overflow.
double log_sum_exp(std::span<const double> args);

inline double sigmoid(double x) {
  // Split on sign to avoid overflow in exp for large |x|.
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// Binary entropy in nats with the continuous extension 0*ln(0) = 0.
inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

// x*ln(x) with 0*ln(0) = 0.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// Two-tailed p-value of a Student-t statistic with dof degrees of freedom,
// p = I_{dof/(dof+t^2)}(dof/2, 1/2). Infinite |t| clamps to p = 0.
double student_t_two_tailed_p(double t, double dof);

}  // namespace numeric
}  // namespace coalfe
