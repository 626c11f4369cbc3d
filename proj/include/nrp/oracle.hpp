// Copyright 2026 The nrp-chee Authors
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

#include <cstdint>
#include <optional>
#include <string_view>

#include "nrp/model.hpp"

namespace nrp {

enum class ExactStatus { kOptimal, kInfeasible, kTimeout };

std::string_view to_string(ExactStatus status);

struct ExactResult {
    ExactStatus status = ExactStatus::kInfeasible;
    // Best feasible cost and roster found. Proven optimal only when status is kOptimal;
    // on kTimeout this is the incumbent, if any.
    std::optional<int> cost;
    Roster roster;
    std::int64_t nodes_explored = 0;
};

/// Depth-first branch and bound over nurses in id order. Intended for desk-scale
/// instances only; gives up with kTimeout after `node_budget` search nodes.
ExactResult exact_solve(const Instance &instance, std::int64_t node_budget);

}  // namespace nrp
