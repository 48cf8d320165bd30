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

#ifndef BBTUNE_SERIALIZE_HPP_
#define BBTUNE_SERIALIZE_HPP_

#include <nlohmann/json_fwd.hpp>

#include "bbtune/adapters.hpp"
#include "bbtune/toyvl.hpp"

// JSON forms of the task and adapter state: matrices as nested arrays, no
// binary payloads, round-trip exact for doubles.
namespace bbtune {

nlohmann::json task_spec_to_json(const TaskSpec& spec);
TaskSpec task_spec_from_json(const nlohmann::json& j);

nlohmann::json task_to_json(const GeneratedTask& task);
GeneratedTask task_from_json(const nlohmann::json& j);

nlohmann::json adapter_to_json(const Adapter& adapter);

}  // namespace bbtune

#endif  // BBTUNE_SERIALIZE_HPP_
