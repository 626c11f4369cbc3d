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

#include <span>

#include "nrp/evaluate.hpp"
#include "nrp/model.hpp"
#include "nrp/random.hpp"

namespace nrp {

enum class ThresholdMode {
    kRandom,  // one uniform threshold drawn per call
    kFixed,
};

struct EliminationConfig {
    ThresholdMode mode = ThresholdMode::kRandom;
    double fixed_threshold = 0.5;
    double r_m = 0.05;
    bool enable_elim1 = true;
    bool enable_elim2 = true;
};

void validate(const EliminationConfig &config);

/// Releases every nurse whose fitness is at or below one shared threshold.
/// Consumes one draw in kRandom mode and none in kFixed mode or when disabled.
Roster elimination_one(const Roster &roster, std::span<const ComponentFitness> fitness,
                       const EliminationConfig &config, Rng &rng);

/// Releases each still-assigned nurse with probability r_m, one draw per assigned
/// nurse in ascending id order.
Roster elimination_two(const Roster &roster, const EliminationConfig &config, Rng &rng);

}  // namespace nrp
