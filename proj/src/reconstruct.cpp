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

#include "nrp/reconstruct.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace nrp {

namespace {

void require_allowed(const Instance &instance, NurseId i, PatternId j) {
    if (!instance.allows(i, j)) {
        throw InvalidRosterError("pattern " + std::to_string(j) + " is not feasible for nurse " + std::to_string(i));
    }
}

int count_short_periods(const ShiftPattern &pattern, const CoverageState &coverage, int band) {
    int count = 0;
    for (int k = 0; k < kPeriods; ++k) {
        if (pattern.covers(k) && coverage.shortfall(k, band) > 0) ++count;
    }
    return count;
}

double combined_score_unchecked(const Instance &instance, const CoverageState &coverage,
                                const EvalWeights &weights, NurseId i, const PatternOption &option) {
    const ShiftPattern &pattern = instance.pattern(option.pattern);
    double score = weights.w_p * (100 - option.cost);
    for (int s = instance.nurse(i).grade; s <= instance.grade_count(); ++s) {
        int covered_need = 0;
        for (int k = 0; k < kPeriods; ++k) {
            if (!pattern.covers(k)) continue;
            const int shortfall = coverage.shortfall(k, s);
            covered_need += weights.e_mode == CoverageTerm::kIndicator ? (shortfall > 0 ? 1 : 0) : shortfall;
        }
        score += weights.w_grade[static_cast<std::size_t>(s - 1)] * covered_need;
    }
    return score;
}

PatternId pick_by_cover(const Instance &instance, const CoverageState &coverage, NurseId i) {
    const Nurse &nurse = instance.nurse(i);
    const int band = focus_band(instance, coverage, i);
    PatternId best = nurse.options.front().pattern;
    if (band == 0) return best;
    int best_value = -1;
    for (const PatternOption &option : nurse.options) {
        const int value = count_short_periods(instance.pattern(option.pattern), coverage, band);
        if (value > best_value) {
            best_value = value;
            best = option.pattern;
        }
    }
    return best;
}

PatternId pick_by_combined(const Instance &instance, const CoverageState &coverage, const EvalWeights &weights,
                           NurseId i) {
    const Nurse &nurse = instance.nurse(i);
    PatternId best = nurse.options.front().pattern;
    double best_score = -INFINITY;
    for (const PatternOption &option : nurse.options) {
        const double score = combined_score_unchecked(instance, coverage, weights, i, option);
        if (score > best_score) {
            best_score = score;
            best = option.pattern;
        }
    }
    return best;
}

}  // namespace

void validate(const ReconstructionConfig &config) {
    if (config.p1 < 0.0 || config.p2 < 0.0 || config.p3 < 0.0 ||
        std::abs(config.p1 + config.p2 + config.p3 - 1.0) > 1e-12) {
        throw ModelError("rule probabilities p1, p2, p3 must be nonnegative and sum to 1");
    }
}

int focus_band(const Instance &instance, const CoverageState &coverage, NurseId i) {
    for (int s = instance.nurse(i).grade; s <= instance.grade_count(); ++s) {
        for (int k = 0; k < kPeriods; ++k) {
            if (coverage.shortfall(k, s) > 0) return s;
        }
    }
    return 0;
}

int cover_value(const Instance &instance, const CoverageState &coverage, NurseId i, PatternId j) {
    require_allowed(instance, i, j);
    const int band = focus_band(instance, coverage, i);
    return band == 0 ? 0 : count_short_periods(instance.pattern(j), coverage, band);
}

double combined_score(const Instance &instance, const CoverageState &coverage, const EvalWeights &weights,
                      NurseId i, PatternId j) {
    require_allowed(instance, i, j);
    return combined_score_unchecked(instance, coverage, weights, i, PatternOption{j, instance.cost(i, j)});
}

void complete_roster(const Instance &instance, Roster &roster, CoverageState &coverage,
                     const ReconstructionConfig &config, const EvalWeights &weights, Rng &rng) {
    for (NurseId i = 0; i < roster.size(); ++i) {
        if (roster.assigned(i)) continue;

        const double u = uniform01(rng);
        BuildRule rule = BuildRule::kRandom;
        if (u < config.p1) {
            rule = BuildRule::kCover;
        } else if (u < config.p1 + config.p2 || config.p3 == 0.0) {
            rule = BuildRule::kCombined;
        }

        PatternId chosen = kUnassigned;
        switch (rule) {
            case BuildRule::kCover:
                chosen = pick_by_cover(instance, coverage, i);
                break;
            case BuildRule::kCombined:
                chosen = pick_by_combined(instance, coverage, weights, i);
                break;
            case BuildRule::kRandom: {
                const auto &options = instance.nurse(i).options;
                chosen = options[uniform_index(rng, options.size())].pattern;
                break;
            }
        }
        roster.assign(i, chosen);
        coverage.add(instance, i, chosen);
        assert(coverage == compute_coverage(instance, roster));
    }
}

Roster reconstruct(const Instance &instance, const Roster &roster, const ReconstructionConfig &config,
                   const EvalWeights &weights, Rng &rng) {
    Roster out = roster;
    CoverageState coverage = compute_coverage(instance, out);
    complete_roster(instance, out, coverage, config, weights, rng);
    return out;
}

}  // namespace nrp
