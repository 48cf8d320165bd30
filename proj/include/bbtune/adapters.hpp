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

#ifndef BBTUNE_ADAPTERS_HPP_
#define BBTUNE_ADAPTERS_HPP_

#include <variant>
#include <vector>

#include "bbtune/oracle.hpp"
#include "bbtune/rng.hpp"
#include "bbtune/toyvl.hpp"
#include "bbtune/vec.hpp"

namespace bbtune {

// Residual two-layer MLP over output image features. Hidden width is a
// quarter of the feature width.
struct MlpAdapter {
  Mat w1;  // hidden x d_f
  Vec b1;
  Mat w2;  // d_f x hidden
  Vec b2;
  double residual_ratio = 0.2;  // alpha

  // Small random init so the adapted feature starts close to identity.
  static MlpAdapter init(int feature_dim, double residual_ratio,
                         RngStream& rng);

  int feature_dim() const { return w2.rows; }
  int hidden_dim() const { return w1.rows; }
};

// f_hat = normalize(alpha * mlp(f) + (1 - alpha) * f). If the blended vector
// collapses to (near) zero, returns f unchanged and sets *degenerate.
Vec mlp_adapter_forward(const MlpAdapter& adapter, const Vec& f,
                        bool* degenerate = nullptr);

// Key/value cache over the training features, Tip-Adapter style.
struct CacheAdapter {
  Mat keys;           // (C*K) x d_f, unit-norm rows
  Mat labels_onehot;  // (C*K) x C
  double gamma = 5.0;     // sharpness
  double alpha_tip = 1.0; // blend with the zero-shot logits
};

// logits = alpha_tip * (exp(-gamma (1 - f keys^T)) labels) + zero_shot_logits.
Vec cache_adapter_logits(const CacheAdapter& adapter, const Vec& f,
                         const Vec& zero_shot_logits);

// Builds the cache: each key is the renormalized mean of `epochs` jittered
// copies (feature + aug_sigma * gaussian, renormalized per copy) of one
// training feature, labels one-hot. Features are read through the
// FeatureOracle capability.
CacheAdapter build_cache(const std::vector<Sample>& train, int classes,
                         const FeatureOracle& features, double aug_sigma,
                         int epochs, RngStream& rng);

// Runtime adapter slot of a run.
using Adapter = std::variant<std::monostate, MlpAdapter, CacheAdapter>;

// Class logits under a given adapter (identity for monostate): MLP adapters
// transform f before the cosine logits; cache adapters add cached affinities
// to the zero-shot logits.
Vec adapted_logits(const Adapter& adapter, const std::vector<Vec>& text_features,
                   const Vec& f, double tau);

struct AdapterTrainConfig {
  double lr = 0.01;
  int steps = 0;
  bool fine_tune_cache = false;  // train (alpha_tip, gamma); keys stay frozen
};

// Supervised training of the MLP adapter against fixed text features, by
// full-batch Adam on the adapter weights only. Cross-entropy objective,
// gradients local to the adapter; the black-box boundary is never queried.
MlpAdapter train_mlp_adapter(MlpAdapter adapter, const FeatureOracle& features,
                             const std::vector<Vec>& text_features,
                             const std::vector<Sample>& train, double tau,
                             const AdapterTrainConfig& cfg);

// Same objective for the cache adapter; only (alpha_tip, gamma) move and only
// when fine_tune_cache is set (the training-free variant is the default).
CacheAdapter train_cache_adapter(CacheAdapter adapter,
                                 const FeatureOracle& features,
                                 const std::vector<Vec>& text_features,
                                 const std::vector<Sample>& train, double tau,
                                 const AdapterTrainConfig& cfg);

// Mean cross-entropy of the adapted pipeline on a batch, used as the adapter
// training objective and for instrumentation.
double adapter_batch_loss(const Adapter& adapter,
                          const FeatureOracle& features,
                          const std::vector<Vec>& text_features,
                          const std::vector<Sample>& batch, double tau);

}  // namespace bbtune

#endif  // BBTUNE_ADAPTERS_HPP_
