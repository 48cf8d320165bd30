// Copyright 2026 The bbtune Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BBTUNE_OPTIM_HPP_
#define BBTUNE_OPTIM_HPP_

#include <cstdint>

#include "bbtune/oracle.hpp"
#include "bbtune/rng.hpp"
#include "bbtune/vec.hpp"

namespace bbtune {

// theta - lr * grad. Throws on non-finite grad or dimension mismatch.
Vec sgd_step(const Vec& theta, const Vec& grad, double lr);

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  void validate() const;
};

// First/second moment accumulators plus step counter. A pure transition
// state: replaying a recorded gradient sequence reproduces the trajectory
// bit-exactly.
struct AdamState {
  Vec m;
  Vec v;
  std::int64_t t = 0;
  AdamConfig cfg;

  static AdamState init(int dim, const AdamConfig& cfg);
};

// One Adam update with standard bias correction:
//   m <- b1 m + (1-b1) g,  v <- b2 v + (1-b2) g^2,
//   theta <- theta - lr * m_hat / (sqrt(v_hat) + eps).
// Mutates `state`, returns the new parameters.
Vec adam_step(AdamState& state, const Vec& theta, const Vec& grad);

// SPSA with gradient correction (look-ahead momentum), the black-box
// baseline used for the optimizer comparison. Gain schedules follow the
// standard form a_k = a/(k+A)^alpha, c_k = c/k^gamma.
struct SpsaGcConfig {
  double a = 0.02;         // step gain
  double c = 0.01;         // perturbation gain
  double stability = 10.0; // A in the step schedule
  double alpha = 0.602;
  double gamma = 0.101;
  double momentum = 0.9;   // look-ahead momentum coefficient
  int n_two_side = 5;      // repeated two-side estimations per step

  void validate() const;
};

struct SpsaGcState {
  Vec momentum;
  SpsaGcConfig cfg;

  static SpsaGcState init(int dim, const SpsaGcConfig& cfg);
};

// One SPSA-GC step at 1-based iteration `iter`. Draws n_two_side Rademacher
// perturbations, averages the two-sided slope estimates taken at the
// look-ahead point theta - a_k * momentum_coeff * momentum, then
//   momentum <- momentum_coeff * momentum + g_hat,
//   theta <- theta - a_k * momentum.
// Consumes exactly 2 * n_two_side queries.
Vec spsa_gc_step(SpsaGcState& state, LossOracle& oracle, const Vec& theta,
                 std::int64_t iter, RngStream& rng);

}  // namespace bbtune

#endif  // BBTUNE_OPTIM_HPP_
