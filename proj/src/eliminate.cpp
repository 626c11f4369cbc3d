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

#include "nrp/eliminate.hpp"

#include <string>

namespace nrp {

void validate(const EliminationConfig &config) {
    if (config.fixed_threshold < 0.0 || config.fixed_threshold > 1.0) {
        throw ModelError("fixed elimination threshold must be in [0, 1]");
    }
    if (config.r_m < 0.0 || config.r_m > 1.0) throw ModelError("r_m must be in [0, 1]");
}

Roster elimination_one(const Roster &roster, std::span<const ComponentFitness> fitness,
                       const EliminationConfig &config, Rng &rng) {
    if (static_cast<int>(fitness.size()) != roster.size()) {
        throw InvalidRosterError("fitness has " + std::to_string(fitness.size()) + " entries for " +
                                 std::to_string(roster.size()) + " nurses");
    }
    if (!config.enable_elim1) return roster;

    const double threshold = config.mode == ThresholdMode::kRandom ? uniform01(rng) : config.fixed_threshold;
    Roster out = roster;
    for (NurseId i = 0; i < out.size(); ++i) {
        if (fitness[static_cast<std::size_t>(i)].f <= threshold) out.release(i);
    }
    return out;
}

Roster elimination_two(const Roster &roster, const EliminationConfig &config, Rng &rng) {
    if (!config.enable_elim2) return roster;
    Roster out = roster;
    for (NurseId i = 0; i < out.size(); ++i) {
        if (!out.assigned(i)) continue;
        if (uniform01(rng) < config.r_m) out.release(i);
    }
    return out;
}

}  // namespace nrp
