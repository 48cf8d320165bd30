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

#ifndef BBTUNE_TOYVL_HPP_
#define BBTUNE_TOYVL_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "bbtune/oracle.hpp"
#include "bbtune/rng.hpp"
#include "bbtune/vec.hpp"

namespace bbtune {

// Learnable prompt: context_len embeddings of width embed_dim, stored flat.
struct PromptParams {
  int context_len = 0;  // M
  int embed_dim = 0;    // per-embedding width
  Vec flat;             // dimension M * embed_dim

  int dim() const { return context_len * embed_dim; }
  void validate() const;
};

struct Sample {
  Vec image;  // toy image payload: a d_f vector, unit norm
  int label = 0;
};

struct FewShotDataset {
  std::vector<Sample> train;  // exactly shots per class
  std::vector<Sample> test;   // test_per_class per class
  int classes = 0;
};

// Frozen simulated two-tower model. The text side is a fixed two-layer
// affine-tanh-affine encoder over [prompt, class embedding] followed by
// Euclidean normalization; the image side is a seeded feature generator with
// a domain-shift matrix. true_prompt is the hidden optimum used only for
// instrumentation (normalized loss) and white-box baselines.
struct ToyVLModel {
  int classes = 0;      // C
  int embed_dim = 0;    // d_e
  int feature_dim = 0;  // d_f
  int context_len = 0;  // M
  double tau = 0.07;

  Mat class_embeddings;  // C x d_e
  Mat enc_w1;            // hidden x (M+1) d_e, hidden = d_f
  Vec enc_b1;
  Mat enc_w2;            // d_f x hidden
  Vec enc_b2;

  Mat domain_shift;      // d_f x d_f, S = I + shift_strength * R
  double feature_noise = 0.0;

  PromptParams true_prompt;  // theta*
};

// Everything that defines a synthetic few-shot task.
struct TaskSpec {
  int classes = 16;
  int embed_dim = 16;
  int feature_dim = 32;
  int context_len = 1;
  int shots = 16;
  int test_per_class = 100;
  double feature_noise = 0.15;
  double shift_strength = 0.3;
  double init_offset = 2.0;
  double tau = 0.07;
  std::uint64_t seed = 1;

  void validate() const;
};

struct GeneratedTask {
  TaskSpec spec;
  ToyVLModel model;
  FewShotDataset data;
  PromptParams theta0;
};

// t_i = normalize(encoder([v1..vM, c_i])) for every class. Deterministic.
std::vector<Vec> encode_prompted_text(const ToyVLModel& model,
                                      const PromptParams& prompt);

// Cosine-softmax class probabilities, computed with max-subtraction.
Vec predict(const std::vector<Vec>& text_features, const Vec& image_feature,
            double tau);

// Mean cross-entropy -log P(y|x) over the batch. This is the function the
// loss-query boundary exposes.
double batch_loss(const ToyVLModel& model, const PromptParams& prompt,
                  const std::vector<Sample>& batch);

// Exact reverse-mode gradient of batch_loss with respect to the flattened
// prompt. White-box reference: used by tests and white-box baselines only,
// never by the black-box tuning path.
Vec analytic_prompt_gradient(const ToyVLModel& model,
                             const PromptParams& prompt,
                             const std::vector<Sample>& batch);

// |L(theta*) - L(theta)| / |L(theta*) - L(theta0)| on the given batch,
// through the adapter-free path. 1 at theta0, 0 at theta*.
double normalized_loss(const ToyVLModel& model, const PromptParams& theta,
                       const PromptParams& theta0,
                       const std::vector<Sample>& batch);

// Draws the frozen model, the hidden optimum theta*, a miscalibrated initial
// prompt theta0 = theta* + init_offset * (unit-sphere direction), and
// disjoint train/test splits. Image features of class i are
// normalize(S t*_i + sigma * noise). Degenerate draws (near-identical class
// features or a prompt-insensitive encoder) are regenerated from a perturbed
// sub-seed, at most 5 attempts.
GeneratedTask generate_task(const TaskSpec& spec);

// LossOracle over the toy model: one query = mean cross-entropy of the full
// training batch at the queried prompt. An optional feature transform
// (the locally trained adapter) can be rebound between phases; it is applied
// on the image side of the pipeline and never changes the ledger.
class ToyVLLossOracle final : public LossOracle {
 public:
  ToyVLLossOracle(const ToyVLModel& model, const std::vector<Sample>& batch);

  // Rebinds the image-feature transform used inside the loss. Passing an
  // empty function restores the identity. Not thread safe against in-flight
  // queries; call between phases.
  void set_feature_transform(std::function<Vec(const Vec&)> transform);

 protected:
  double eval(const Vec& theta) const override;

 private:
  const ToyVLModel& model_;
  const std::vector<Sample>& batch_;
  std::function<Vec(const Vec&)> transform_;
};

// FeatureOracle over the toy model: image payloads are already features at
// desk scale, so encode_image is a renormalization; zero-shot text features
// come from the initial prompt captured at construction.
class ToyVLFeatureOracle final : public FeatureOracle {
 public:
  ToyVLFeatureOracle(const ToyVLModel& model, PromptParams theta0);

  int feature_dim() const override { return model_.feature_dim; }
  int num_classes() const override { return model_.classes; }
  Vec encode_image(const Vec& image) const override;
  std::vector<Vec> zero_shot_text_features() const override;

 private:
  const ToyVLModel& model_;
  PromptParams theta0_;
};

}  // namespace bbtune

#endif  // BBTUNE_TOYVL_HPP_
