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

#ifndef BBTUNE_ESTIMATOR_HPP_
#define BBTUNE_ESTIMATOR_HPP_

#include <cstdint>

#include "bbtune/oracle.hpp"
#include "bbtune/rng.hpp"
#include "bbtune/vec.hpp"

namespace bbtune {

// Knobs of the stochastic perturbation estimator: q directions per estimate,
// perturbation scale beta (absolute parameter units), and the bias/variance
// scaling factor b.
struct EstimatorConfig {
  int q = 256;
  double beta = 0.0;
  double b = 0.0;

  // q=256, b=D, beta=1/D.
  static EstimatorConfig defaults_for_dim(int dim);
  // Throws std::invalid_argument on q < 1, beta <= 0 or b <= 0.
  void validate() const;
};

struct GradientEstimate {
  Vec grad;
  double base_loss = 0.0;
  std::int64_t queries_used = 0;
  EstimatorConfig config;
};

// Forward-difference gradient, one coordinate at a time:
//   grad[i] = (f(theta + beta e_i) - f(theta)) / beta.
// Costs exactly dim + 1 queries.
GradientEstimate estimate_coordinate(LossOracle& oracle, const Vec& theta,
                                     double beta);

// Stochastic perturbation estimate: draws eps_1..eps_q from the unit sphere,
// takes the slope b * (f(theta + beta eps_i) - f(theta)) / beta along each
// direction and averages the q slopes. Costs exactly q + 1 queries.
//
// Direction i comes from a per-sample substream, and the slopes are reduced
// pairwise in ascending sample index, so the result is bit-identical whether
// the q perturbed queries run sequentially or fan out to workers.
GradientEstimate estimate_stochastic(LossOracle& oracle, const Vec& theta,
                                     const EstimatorConfig& cfg,
                                     RngStream& rng);

// Inputs of the closed-form estimation error bound.
struct BoundInputs {
  double b = 0.0;
  int dim = 0;
  int q = 0;
  double beta = 0.0;
  double lipschitz = 0.0;      // Lipschitz constant of the gradient
  double grad_norm_sq = 0.0;   // ||grad f(theta)||^2

  void validate() const;
};

// Upper bound on E||g_bar - grad f||^2:
//   4 (b^2/D^2 + b^2/(D q) + (b-D)^2/D^2) ||grad f||^2
//     + ((2q+1)/q) b^2 beta^2 L^2.
double error_bound(const BoundInputs& inputs);

struct EstimateQuality {
  double cosine = 0.0;  // NaN when the true gradient is zero
  double mse = 0.0;     // squared Euclidean error
};

// Cosine similarity and squared error between an estimate and the true
// gradient. cosine is NaN when ||true_grad|| == 0 (undefined); mse is always
// valid.
EstimateQuality estimate_quality(const Vec& grad_est, const Vec& true_grad);

}  // namespace bbtune

#endif  // BBTUNE_ESTIMATOR_HPP_
