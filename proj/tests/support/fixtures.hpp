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

// Small hand-built instances shared by the unit tests.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nrp/model.hpp"

namespace nrp::testing {

inline ShiftPattern pattern(PatternId id, const std::string &bits) {
    return ShiftPattern{id, ShiftPattern::mask_from_string(bits)};
}

inline Demand uniform_demand(int grades, int value) {
    Demand demand(grades);
    for (int k = 0; k < kPeriods; ++k) {
        for (int s = 1; s <= grades; ++s) demand.set(k, s, value);
    }
    return demand;
}

/// One nurse per (grade, options) entry, ids in order.
inline std::vector<Nurse> nurses(std::vector<std::pair<int, std::vector<PatternOption>>> specs) {
    std::vector<Nurse> out;
    for (auto &[grade, options] : specs) {
        out.push_back(Nurse{static_cast<NurseId>(out.size()), grade, std::move(options)});
    }
    return out;
}

}  // namespace nrp::testing
