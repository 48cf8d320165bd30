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

#ifndef BBTUNE_TRAINER_HPP_
#define BBTUNE_TRAINER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbtune/adapters.hpp"
#include "bbtune/cmaes.hpp"
#include "bbtune/estimator.hpp"
#include "bbtune/optim.hpp"
#include "bbtune/toyvl.hpp"

namespace bbtune {

enum class ScheduleVariant {
  kAlt,            // alternate one prompt epoch with one adapter epoch
  kPromptAdapter,  // prompt until convergence, then adapter (P-A)
  kAdapterPrompt,  // adapter first, then prompt until convergence (A-P)
  kPromptOnly,
  kAdapterOnly,
  kZeroShot,
};

std::string schedule_variant_name(ScheduleVariant v);
std::optional<ScheduleVariant> parse_schedule_variant(const std::string& s);

struct Schedule {
  ScheduleVariant variant = ScheduleVariant::kPromptOnly;
  int period = 1;                   // epochs per phase for ALT
  int patience = 3;                 // epochs without improvement (P-A / A-P)
  double patience_threshold = 1e-4; // minimum train-loss improvement
  int prompt_iters_per_epoch = 50;
  int adapter_steps_per_epoch = 50;
  int settle_adapter_epochs = 10;   // adapter epochs in the one-shot phases

  void validate() const;
};

// Estimator knobs before the parameter dimension is known; beta and b fall
// back to 1/D and D.
struct EstimatorSettings {
  int q = 256;
  std::optional<double> beta;
  std::optional<double> b;

  EstimatorConfig resolve(int dim) const;
};

enum class OptimizerKind { kAdam, kSgd, kSpsaGc, kCmaEs };

std::string optimizer_kind_name(OptimizerKind k);
std::optional<OptimizerKind> parse_optimizer_kind(const std::string& s);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::kAdam;
  AdamConfig adam{.lr = 0.02};
  double sgd_lr = 0.02;
  SpsaGcConfig spsa;
  CmaEsConfig cmaes;
};

enum class AdapterKind { kNone, kMlp, kCache };

std::string adapter_kind_name(AdapterKind k);
std::optional<AdapterKind> parse_adapter_kind(const std::string& s);

struct AdapterConfig {
  AdapterKind kind = AdapterKind::kNone;
  double residual_ratio = 0.2;  // MLP blend
  double lr = 0.01;
  double alpha_tip = 1.0;  // cache blend
  double gamma = 5.0;      // cache sharpness
  bool fine_tune = false;  // cache: train (alpha_tip, gamma)
  double aug_sigma = 0.05; // cache build jitter
  int aug_epochs = 10;
};

// Stop on whichever limit is hit first; at least one must be set for
// schedules that tune the prompt.
struct Budget {
  std::optional<std::int64_t> max_api_calls;
  std::optional<std::int64_t> max_prompt_iters;
};

struct RunRecord {
  std::int64_t iter = 0;  // prompt iterations completed
  std::string phase;      // "prompt" or "adapter"
  double train_loss = 0.0;
  double normalized_loss = 0.0;
  double test_accuracy = 0.0;
  std::int64_t api_calls_cum = 0;
  std::int64_t wall_ms = 0;
};

// Everything that defines a run except the task and the seed.
struct ExperimentSetup {
  Schedule schedule;
  EstimatorSettings estimator;
  OptimizerConfig optimizer;
  AdapterConfig adapter;
  Budget budget;
  int eval_every = 10;  // prompt iterations between evaluations
};

struct RunResult {
  PromptParams prompt;
  Adapter adapter;
  std::vector<RunRecord> records;
  double final_accuracy = 0.0;
  double final_train_loss = 0.0;
  std::int64_t total_api_calls = 0;
};

// Executes the schedule against the task's loss-query boundary. One record is
// emitted per evaluation point (every eval_every prompt iterations, every
// adapter epoch, every phase boundary, and at termination). Deterministic
// given (task, setup, run_seed) regardless of `jobs`.
RunResult run(const GeneratedTask& task, const ExperimentSetup& setup,
              std::uint64_t run_seed, int jobs = 1);

// Fraction of test samples whose argmax prediction (through the adapter, if
// any) matches the label.
double evaluate(const ToyVLModel& model, const PromptParams& prompt,
                const Adapter& adapter, const std::vector<Sample>& test);

enum class AblationAxis { kQ, kPromptLength, kShots, kSchedule };

std::string ablation_axis_name(AblationAxis a);
std::optional<AblationAxis> parse_ablation_axis(const std::string& s);

struct AblationCell {
  std::string axis;
  std::string value;
  std::uint64_t seed = 0;
  double final_acc = 0.0;
  double final_loss = 0.0;
  std::int64_t api_calls = 0;
  bool ok = false;
  std::string error;
};

// Cross-product of values x seeds with everything else held fixed. For the
// prompt_length axis, scale_q grows q proportionally to the parameter
// dimension. A failed cell is recorded, not fatal.
std::vector<AblationCell> ablate(AblationAxis axis,
                                 const std::vector<std::string>& values,
                                 const TaskSpec& base_task,
                                 const ExperimentSetup& base_setup,
                                 const std::vector<std::uint64_t>& seeds,
                                 bool scale_q, int jobs);

}  // namespace bbtune

#endif  // BBTUNE_TRAINER_HPP_
