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

#include "nrp/solver.hpp"

#include <chrono>

namespace nrp {

namespace {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool reached_known_optimum(const Instance &instance, const SolverConfig &config, const CoverageState &coverage,
                           int preference) {
    return config.stop_at_known_optimal && instance.known_optimal() && coverage.total_shortfall() == 0 &&
           preference <= *instance.known_optimal();
}

void record_best(RunResult &result, const Instance &instance, const Roster &roster, const CoverageState &coverage,
                 double cost, std::int64_t iteration) {
    result.best_cost = cost;
    result.best_roster = roster;
    result.best_feasible = coverage.total_shortfall() == 0;
    result.best_preference_cost = preference_cost(instance, roster);
    result.iteration_of_best = iteration;
}

}  // namespace

void validate(const SolverConfig &config, const Instance &instance) {
    if (config.max_iterations < 1) throw ModelError("max_iterations must be at least 1");
    if (config.trajectory_stride < 1) throw ModelError("trajectory stride must be at least 1");
    validate(config.eval, instance.grade_count());
    validate(config.elim);
    validate(config.recon);
}

Roster initialize(const Instance &instance, Rng &rng) {
    Roster roster(instance.nurse_count());
    for (NurseId i = 0; i < roster.size(); ++i) {
        const auto &options = instance.nurse(i).options;
        roster.assign(i, options[uniform_index(rng, options.size())].pattern);
    }
    return roster;
}

RunResult run(const Instance &instance, const SolverConfig &config) {
    validate(config, instance);
    const Stopwatch clock;
    Rng rng(config.seed);

    RunResult result;
    result.seed = config.seed;

    Roster roster = initialize(instance, rng);
    CoverageState coverage = compute_coverage(instance, roster);
    record_best(result, instance, roster, coverage, penalized_cost(instance, roster, coverage, config.eval), 0);
    if (config.trajectory != TrajectoryMode::kNone) result.trajectory.push_back({0, result.best_cost});

    bool done = reached_known_optimum(instance, config, coverage, result.best_preference_cost);
    for (std::int64_t t = 1; t <= config.max_iterations && !done; ++t) {
        const auto fitness = component_fitness_all(instance, roster, config.eval);
        Roster partial = elimination_one(roster, fitness, config.elim, rng);
        partial = elimination_two(partial, config.elim, rng);
        for (NurseId i = 0; i < partial.size(); ++i) {
            if (!partial.assigned(i)) coverage.remove(instance, i, roster[i]);
        }
        roster = std::move(partial);
        complete_roster(instance, roster, coverage, config.recon, config.eval, rng);

        const int preference = preference_cost(instance, roster);
        const double cost = preference + config.eval.w_demand * coverage.total_shortfall();
        const bool improved = cost < result.best_cost;
        if (improved) record_best(result, instance, roster, coverage, cost, t);

        if (config.trajectory == TrajectoryMode::kFull ||
            (config.trajectory == TrajectoryMode::kSampled && (improved || t % config.trajectory_stride == 0))) {
            result.trajectory.push_back({t, result.best_cost});
        }
        result.iterations_executed = t;
        done = reached_known_optimum(instance, config, coverage, preference);
    }

    result.wall_seconds = clock.seconds();
    return result;
}

RunResult run_con_heu(const Instance &instance, const SolverConfig &config) {
    validate(config, instance);
    const Stopwatch clock;
    Rng rng(config.seed);

    Roster roster(instance.nurse_count());
    CoverageState coverage(instance);
    complete_roster(instance, roster, coverage, config.recon, config.eval, rng);

    RunResult result;
    result.seed = config.seed;
    record_best(result, instance, roster, coverage, penalized_cost(instance, roster, coverage, config.eval), 0);
    if (config.trajectory != TrajectoryMode::kNone) result.trajectory.push_back({0, result.best_cost});
    result.wall_seconds = clock.seconds();
    return result;
}

}  // namespace nrp
