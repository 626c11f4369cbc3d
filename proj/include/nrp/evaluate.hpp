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

#include <vector>

#include "nrp/model.hpp"

namespace nrp {

/// How the Combined rule counts uncovered shifts a pattern would cover.
enum class CoverageTerm {
    kIndicator,  // 1 per short (period, band)
    kShortfall,  // the full remaining shortfall per (period, band)
};

struct EvalWeights {
    double w1 = 0.5;  // preference part of the component fitness
    double w2 = 0.5;  // coverage part of the component fitness
    double w_demand = 200.0;  // penalty per uncovered shift
    double w_p = 1.0;  // Combined rule: preference weight
    std::vector<double> w_grade{8.0, 2.0, 1.0};  // Combined rule: weight per grade band, band 1 first
    CoverageTerm e_mode = CoverageTerm::kIndicator;
};

/// Throws ModelError if the weights break their invariants for an instance with `grades` bands.
void validate(const EvalWeights &weights, int grades);

struct ComponentFitness {
    double f1 = 0.0;
    double f2 = 0.0;
    double f = 0.0;
};

/// Number of covered (period, band) cells that would be short without nurse i's pattern.
int coverage_contribution(const Instance &instance, const Roster &roster, const CoverageState &coverage,
                          NurseId i);

/// Normalized fitness of every nurse's assignment, from one snapshot of a complete roster.
std::vector<ComponentFitness> component_fitness_all(const Instance &instance, const Roster &roster,
                                                    const EvalWeights &weights);

/// Preference cost plus w_demand per unit of shortfall.
double penalized_cost(const Instance &instance, const Roster &roster, const EvalWeights &weights);
double penalized_cost(const Instance &instance, const Roster &roster, const CoverageState &coverage,
                      const EvalWeights &weights);

}  // namespace nrp
