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

#include "nrp/evaluate.hpp"

#include <algorithm>
#include <cmath>

namespace nrp {

namespace {

// Maps value into [0, 1] relative to [lo, hi]; a degenerate range maps to 0.5.
double normalize(double value, double lo, double hi) {
    if (hi == lo) return 0.5;
    return (value - lo) / (hi - lo);
}

void require_complete(const Roster &roster, const char *what) {
    if (!roster.complete()) throw IncompleteRosterError(std::string(what) + " needs a complete roster");
}

}  // namespace

void validate(const EvalWeights &weights, int grades) {
    if (weights.w1 < 0.0 || weights.w2 < 0.0 || std::abs(weights.w1 + weights.w2 - 1.0) > 1e-12) {
        throw ModelError("fitness weights w1, w2 must be nonnegative and sum to 1");
    }
    if (!(weights.w_demand > 0.0)) throw ModelError("w_demand must be positive");
    if (weights.w_p < 0.0) throw ModelError("w_p must be nonnegative");
    if (static_cast<int>(weights.w_grade.size()) < grades) {
        throw ModelError("need a Combined-rule weight for each of the " + std::to_string(grades) + " grade bands");
    }
    for (double w : weights.w_grade) {
        if (w < 0.0) throw ModelError("grade weights must be nonnegative");
    }
}

int coverage_contribution(const Instance &instance, const Roster &roster, const CoverageState &coverage,
                          NurseId i) {
    require_complete(roster, "coverage contribution");
    const ShiftPattern &pattern = instance.pattern(roster[i]);
    const int grades = instance.grade_count();
    int contribution = 0;
    for (int s = instance.nurse(i).grade; s <= grades; ++s) {
        for (int k = 0; k < kPeriods; ++k) {
            // This nurse is one of the covered[k][s] contributors here.
            if (pattern.covers(k) && coverage.covered(k, s) - 1 < instance.demand().at(k, s)) ++contribution;
        }
    }
    return contribution;
}

std::vector<ComponentFitness> component_fitness_all(const Instance &instance, const Roster &roster,
                                                    const EvalWeights &weights) {
    require_complete(roster, "component fitness");
    const CoverageState coverage = compute_coverage(instance, roster);
    const int n = instance.nurse_count();

    std::vector<int> costs(static_cast<std::size_t>(n));
    std::vector<int> contributions(static_cast<std::size_t>(n));
    for (NurseId i = 0; i < n; ++i) {
        costs[static_cast<std::size_t>(i)] = instance.cost(i, roster[i]);
        contributions[static_cast<std::size_t>(i)] = coverage_contribution(instance, roster, coverage, i);
    }
    const auto [p_min, p_max] = std::minmax_element(costs.begin(), costs.end());
    const auto [c_min, c_max] = std::minmax_element(contributions.begin(), contributions.end());

    std::vector<ComponentFitness> fitness(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        ComponentFitness &out = fitness[i];
        // Low cost is good, so f1 runs from p_max (0) down to p_min (1).
        out.f1 = normalize(*p_max - costs[i], 0.0, *p_max - *p_min);
        out.f2 = normalize(contributions[i], *c_min, *c_max);
        out.f = weights.w1 * out.f1 + weights.w2 * out.f2;
    }
    return fitness;
}

double penalized_cost(const Instance &instance, const Roster &roster, const EvalWeights &weights) {
    return penalized_cost(instance, roster, compute_coverage(instance, roster), weights);
}

double penalized_cost(const Instance &instance, const Roster &roster, const CoverageState &coverage,
                      const EvalWeights &weights) {
    return preference_cost(instance, roster) + weights.w_demand * coverage.total_shortfall();
}

}  // namespace nrp
