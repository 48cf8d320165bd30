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

#ifndef BBTUNE_ORACLE_HPP_
#define BBTUNE_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "bbtune/vec.hpp"

namespace bbtune {

// Exact API-call accounting. Counts are monotone; total equals the sum over
// phase labels. Thread safe.
class QueryLedger {
 public:
  void add(const std::string& phase, std::int64_t n = 1);
  std::int64_t total() const;
  std::int64_t phase_count(const std::string& phase) const;
  std::map<std::string, std::int64_t> by_phase() const;

 private:
  mutable std::mutex mu_;
  std::int64_t total_ = 0;
  std::map<std::string, std::int64_t> phase_;
};

// The black-box boundary. Callers see loss values and the ledger, nothing
// else. query() is a pure function of theta for a fixed training batch, so
// repeated and concurrent evaluation is safe and deterministic.
//
// Note on the range: the tuning objective behind this boundary is a
// cross-entropy, hence non-negative; the base class only enforces finiteness
// so that synthetic test functions (which may go negative) can implement the
// same contract.
class LossOracle {
 public:
  explicit LossOracle(int dim);
  virtual ~LossOracle() = default;

  LossOracle(const LossOracle&) = delete;
  LossOracle& operator=(const LossOracle&) = delete;

  int dim() const { return dim_; }

  // One API call: mean loss over the full training batch at theta.
  // Throws on dimension mismatch or a non-finite result (oracle fault).
  double query(const Vec& theta);

  // Batch fan-out. Result i equals query(thetas[i]); order matches the input
  // regardless of internal scheduling. Any failure aborts with an error
  // naming the smallest offending index. Ledger moves by thetas.size().
  std::vector<double> query_many(const std::vector<Vec>& thetas);

  const QueryLedger& ledger() const { return ledger_; }

  // Phase label for subsequent ledger increments (set between phases, not
  // concurrently with queries).
  void set_phase(std::string label);
  const std::string& phase() const { return phase_; }

  // Worker count for query_many fan-out. 1 = sequential.
  void set_jobs(int jobs);
  int jobs() const { return jobs_; }

 protected:
  // The actual loss; must be pure in theta.
  virtual double eval(const Vec& theta) const = 0;

 private:
  double checked_eval(const Vec& theta) const;

  int dim_;
  std::string phase_ = "default";
  int jobs_ = 1;
  QueryLedger ledger_;
};

// Optional capability for the adapter path: output features of the black-box
// model. Image payloads map to unit-norm feature vectors; text features for
// the initial (hand-crafted analog) prompt are exposed for zero-shot logits.
// Strict black-box experiments simply never receive this interface.
class FeatureOracle {
 public:
  virtual ~FeatureOracle() = default;

  virtual int feature_dim() const = 0;
  virtual int num_classes() const = 0;
  // Unit-norm (within 1e-9) feature for one image sample.
  virtual Vec encode_image(const Vec& image) const = 0;
  // Text features of the initial prompt, one unit-norm vector per class.
  virtual std::vector<Vec> zero_shot_text_features() const = 0;
};

}  // namespace bbtune

#endif  // BBTUNE_ORACLE_HPP_
