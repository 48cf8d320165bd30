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

#ifndef BBTUNE_CMAES_HPP_
#define BBTUNE_CMAES_HPP_

#include <vector>

#include "bbtune/rng.hpp"
#include "bbtune/vec.hpp"

namespace bbtune {

struct CmaEsConfig {
  int lambda = 10;      // population size
  double sigma0 = 1.0;  // initial step size

  void validate() const;
};

// Standard (mu/mu_w, lambda) CMA-ES: weighted recombination of the best
// mu = floor(lambda/2) candidates, cumulative step-size adaptation, and
// rank-one plus rank-mu covariance updates. No restarts.
//
// ask() samples lambda candidates from N(mean, sigma^2 C) without touching
// the state; tell() consumes the ranked losses. Ties are broken by candidate
// index. The covariance is re-symmetrized and eigendecomposed after each
// tell().
class CmaEs {
 public:
  CmaEs(Vec mean, const CmaEsConfig& cfg);

  // lambda candidates; state unchanged. Throws if the covariance has lost
  // positive definiteness.
  std::vector<Vec> ask(RngStream& rng) const;

  // Rank-based update from the candidates returned by the matching ask().
  // Throws if sizes do not match lambda.
  void tell(const std::vector<Vec>& candidates,
            const std::vector<double>& losses);

  const Vec& mean() const { return mean_; }
  double step_size() const { return sigma_; }
  const Mat& covariance() const { return cov_; }
  int lambda() const { return cfg_.lambda; }
  int dim() const { return dim_; }
  std::int64_t generation() const { return generation_; }

 private:
  void refresh_eigen();

  int dim_;
  CmaEsConfig cfg_;

  // strategy constants, fixed at construction
  int mu_;
  std::vector<double> weights_;
  double mu_eff_;
  double c_sigma_, d_sigma_, c_c_, c_1_, c_mu_, chi_n_;

  // evolving state
  Vec mean_;
  double sigma_;
  Mat cov_;
  Vec path_sigma_;
  Vec path_c_;
  std::int64_t generation_ = 0;

  // cached eigendecomposition of cov_: cov = B diag(d^2) B^T
  Mat eig_basis_;
  Vec eig_sqrt_;
};

}  // namespace bbtune

#endif  // BBTUNE_CMAES_HPP_
