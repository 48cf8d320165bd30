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

#ifndef BBTUNE_RNG_HPP_
#define BBTUNE_RNG_HPP_

#include <cstdint>

namespace bbtune {

// Counter-based splittable random stream (SplitMix64 core).
//
// A stream is fully identified by (seed, stream_id): the same pair always
// replays the same sequence. Child streams derived with substream(id) are
// independent of how much the parent has advanced, so perturbation i of
// iteration t can be drawn from substream(t).substream(i) in any evaluation
// order with bit-identical results. fork() derives a child from the current
// position and advances the parent.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();
  // Uniform on [0, 1), 53-bit resolution.
  double next_double();
  // Standard normal via Box-Muller; consumes two draws, caches nothing.
  double next_gaussian();

  // Pure derivation: child keyed by (seed, stream_id, id). Independent of the
  // parent's counter position.
  RngStream substream(std::uint64_t id) const;
  // Derives a child from the current position and advances the parent.
  RngStream fork();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
};

}  // namespace bbtune

#endif  // BBTUNE_RNG_HPP_
