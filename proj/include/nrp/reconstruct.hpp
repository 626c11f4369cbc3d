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

#include "nrp/evaluate.hpp"
#include "nrp/model.hpp"
#include "nrp/random.hpp"

namespace nrp {

/// Probabilities of the three building rules, drawn once per released nurse.
struct ReconstructionConfig {
    double p1 = 0.80;  // Cover
    double p2 = 0.18;  // Combined
    double p3 = 0.02;  // uniformly random pattern
};

void validate(const ReconstructionConfig &config);

enum class BuildRule { kCover, kCombined, kRandom };

/// Highest-priority band (lowest s) the nurse serves that still has a shortfall
/// somewhere in the week, or 0 when every such band is covered.
int focus_band(const Instance &instance, const CoverageState &coverage, NurseId i);

/// Cover rule value: periods of pattern j that are short in the nurse's focus band.
int cover_value(const Instance &instance, const CoverageState &coverage, NurseId i, PatternId j);

/// Combined rule score: w_p (100 - p_ij) plus grade-weighted uncovered shifts that j would cover.
double combined_score(const Instance &instance, const CoverageState &coverage, const EvalWeights &weights,
                      NurseId i, PatternId j);

/// Assigns a pattern to every released nurse in ascending id order; assigned
/// nurses are left alone. `coverage` must match `roster` and is kept in sync.
void complete_roster(const Instance &instance, Roster &roster, CoverageState &coverage,
                     const ReconstructionConfig &config, const EvalWeights &weights, Rng &rng);

Roster reconstruct(const Instance &instance, const Roster &roster, const ReconstructionConfig &config,
                   const EvalWeights &weights, Rng &rng);

}  // namespace nrp
