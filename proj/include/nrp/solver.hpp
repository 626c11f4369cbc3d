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
#include <vector>

#include "nrp/eliminate.hpp"
#include "nrp/evaluate.hpp"
#include "nrp/model.hpp"
#include "nrp/random.hpp"
#include "nrp/reconstruct.hpp"

namespace nrp {

enum class TrajectoryMode {
    kNone,
    kSampled,  // every improvement plus every `trajectory_stride`-th iteration
    kFull,
};

struct SolverConfig {
    std::int64_t max_iterations = 50000;
    std::uint64_t seed = 0;
    EvalWeights eval;
    EliminationConfig elim;
    ReconstructionConfig recon;
    // Stop once a feasible roster with preference cost <= the instance's known optimum appears.
    bool stop_at_known_optimal = true;
    TrajectoryMode trajectory = TrajectoryMode::kSampled;
    std::int64_t trajectory_stride = 1000;
};

void validate(const SolverConfig &config, const Instance &instance);

struct TrajectoryPoint {
    std::int64_t iteration = 0;
    double best_cost = 0.0;

    bool operator==(const TrajectoryPoint &) const = default;
};

struct RunResult {
    double best_cost = 0.0;  // penalized
    Roster best_roster;
    bool best_feasible = false;
    int best_preference_cost = 0;
    std::int64_t iterations_executed = 0;
    std::int64_t iteration_of_best = 0;
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;
    std::vector<TrajectoryPoint> trajectory;
};

/// Uniformly random pattern per nurse, one draw each in id order.
Roster initialize(const Instance &instance, Rng &rng);

/// The iterative evaluate / eliminate / reconstruct search from a random roster.
RunResult run(const Instance &instance, const SolverConfig &config);

/// Baseline: one reconstruction pass from an empty roster, no search loop.
RunResult run_con_heu(const Instance &instance, const SolverConfig &config);

}  // namespace nrp
