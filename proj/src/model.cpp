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

#include "nrp/model.hpp"

#include <algorithm>
#include <sstream>

namespace nrp {

int ShiftPattern::worked_periods() const {
    return static_cast<int>(std::count(mask.begin(), mask.end(), true));
}

std::array<bool, kPeriods> ShiftPattern::mask_from_string(const std::string &bits) {
    if (bits.size() != static_cast<std::size_t>(kPeriods)) {
        throw std::invalid_argument("shift pattern must have 14 entries, got " + std::to_string(bits.size()));
    }
    std::array<bool, kPeriods> mask{};
    for (int k = 0; k < kPeriods; ++k) {
        const char c = bits[static_cast<std::size_t>(k)];
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("shift pattern entry must be 0 or 1, got '") + c + "'");
        }
        mask[static_cast<std::size_t>(k)] = c == '1';
    }
    return mask;
}

std::string ShiftPattern::mask_string() const {
    std::string bits(kPeriods, '0');
    for (int k = 0; k < kPeriods; ++k) {
        if (covers(k)) bits[static_cast<std::size_t>(k)] = '1';
    }
    return bits;
}

Demand::Demand(int grades) : grades_(grades), values_(static_cast<std::size_t>(kPeriods * grades), 0) {}

Instance::Instance(int grades, std::vector<ShiftPattern> patterns, std::vector<Nurse> nurses, Demand demand,
                   std::optional<int> known_optimal)
    : grades_(grades),
      patterns_(std::move(patterns)),
      nurses_(std::move(nurses)),
      demand_(std::move(demand)),
      known_optimal_(known_optimal) {
    if (grades_ < 1) throw ModelError("g must be at least 1");
    if (nurses_.empty()) throw ModelError("n must be at least 1");
    if (patterns_.empty()) throw ModelError("m must be at least 1");
    if (demand_.grades() != grades_) throw ModelError("demand matrix must have g columns");
    if (known_optimal_ && *known_optimal_ < 0) throw ModelError("known optimal cost must be nonnegative");

    const auto m = patterns_.size();
    for (std::size_t j = 0; j < m; ++j) {
        if (patterns_[j].id != static_cast<PatternId>(j)) {
            throw ModelError("pattern ids must be dense: expected " + std::to_string(j) + ", got " +
                             std::to_string(patterns_[j].id));
        }
        if (patterns_[j].worked_periods() == 0) {
            warnings_.push_back("pattern " + std::to_string(j) + " has an all-zero mask");
        }
    }

    cost_table_.assign(nurses_.size() * m, -1);
    for (std::size_t i = 0; i < nurses_.size(); ++i) {
        const Nurse &nurse = nurses_[i];
        const std::string who = "nurse " + std::to_string(i);
        if (nurse.id != static_cast<NurseId>(i)) {
            throw ModelError("nurse ids must be dense: expected " + std::to_string(i) + ", got " +
                             std::to_string(nurse.id));
        }
        if (nurse.grade < 1 || nurse.grade > grades_) {
            throw ModelError(who + ": grade " + std::to_string(nurse.grade) + " outside [1, g]");
        }
        if (nurse.options.empty()) throw ModelError(who + ": empty feasible set");
        for (const PatternOption &option : nurse.options) {
            if (option.pattern < 0 || static_cast<std::size_t>(option.pattern) >= m) {
                throw ModelError(who + ": unknown pattern " + std::to_string(option.pattern));
            }
            if (option.cost < 0 || option.cost > 100) {
                throw ModelError(who + ": cost " + std::to_string(option.cost) + " outside [0, 100]");
            }
            int &slot = cost_table_[lookup(static_cast<NurseId>(i), option.pattern)];
            if (slot >= 0) throw ModelError(who + ": pattern " + std::to_string(option.pattern) + " listed twice");
            slot = option.cost;
        }
    }

    for (int k = 0; k < kPeriods; ++k) {
        for (int s = 1; s <= grades_; ++s) {
            if (demand_.at(k, s) < 0) throw ModelError("demand entries must be nonnegative");
            if (s > 1 && demand_.at(k, s) < demand_.at(k, s - 1)) {
                std::ostringstream msg;
                msg << "demand in period " << k << " is not cumulative across grades (band " << s - 1 << ": "
                    << demand_.at(k, s - 1) << ", band " << s << ": " << demand_.at(k, s) << ")";
                warnings_.push_back(msg.str());
            }
        }
    }
}

Instance Instance::with_known_optimal(std::optional<int> value) const {
    Instance copy = *this;
    if (value && *value < 0) throw ModelError("known optimal cost must be nonnegative");
    copy.known_optimal_ = value;
    return copy;
}

bool Instance::operator==(const Instance &other) const {
    return grades_ == other.grades_ && patterns_ == other.patterns_ && nurses_ == other.nurses_ &&
           demand_ == other.demand_ && known_optimal_ == other.known_optimal_;
}

bool Roster::complete() const {
    return std::none_of(assignment_.begin(), assignment_.end(), [](PatternId j) { return j == kUnassigned; });
}

int Roster::assigned_count() const {
    return static_cast<int>(
        std::count_if(assignment_.begin(), assignment_.end(), [](PatternId j) { return j != kUnassigned; }));
}

CoverageState::CoverageState(const Instance &instance)
    : grades_(instance.grade_count()),
      covered_(static_cast<std::size_t>(kPeriods * grades_), 0),
      shortfall_(covered_.size(), 0),
      demand_(covered_.size(), 0) {
    for (int k = 0; k < kPeriods; ++k) {
        for (int s = 1; s <= grades_; ++s) {
            demand_[index(k, s)] = instance.demand().at(k, s);
            shortfall_[index(k, s)] = demand_[index(k, s)];
        }
    }
}

int CoverageState::total_shortfall() const {
    int total = 0;
    for (int value : shortfall_) total += value;
    return total;
}

void CoverageState::add(const Instance &instance, NurseId i, PatternId j) { apply(instance, i, j, +1); }

void CoverageState::remove(const Instance &instance, NurseId i, PatternId j) { apply(instance, i, j, -1); }

void CoverageState::apply(const Instance &instance, NurseId i, PatternId j, int delta) {
    const ShiftPattern &pattern = instance.pattern(j);
    // Bands grade..g are exactly those the nurse serves.
    const int first_band = instance.nurse(i).grade;
    for (int k = 0; k < kPeriods; ++k) {
        if (!pattern.covers(k)) continue;
        for (int s = first_band; s <= grades_; ++s) {
            const auto at = index(k, s);
            covered_[at] += delta;
            shortfall_[at] = std::max(demand_[at] - covered_[at], 0);
        }
    }
}

void check_roster(const Instance &instance, const Roster &roster) {
    if (roster.size() != instance.nurse_count()) {
        throw InvalidRosterError("roster has " + std::to_string(roster.size()) + " entries for " +
                                 std::to_string(instance.nurse_count()) + " nurses");
    }
    for (NurseId i = 0; i < roster.size(); ++i) {
        if (roster.assigned(i) && !instance.allows(i, roster[i])) {
            throw InvalidRosterError("nurse " + std::to_string(i) + " assigned pattern " +
                                     std::to_string(roster[i]) + " outside its feasible set");
        }
    }
}

CoverageState compute_coverage(const Instance &instance, const Roster &roster) {
    check_roster(instance, roster);
    CoverageState coverage(instance);
    for (NurseId i = 0; i < roster.size(); ++i) {
        if (roster.assigned(i)) coverage.add(instance, i, roster[i]);
    }
    return coverage;
}

bool is_feasible(const Instance &instance, const Roster &roster) {
    if (roster.size() != instance.nurse_count() || !roster.complete()) return false;
    for (NurseId i = 0; i < roster.size(); ++i) {
        if (!instance.allows(i, roster[i])) return false;
    }
    return compute_coverage(instance, roster).total_shortfall() == 0;
}

int preference_cost(const Instance &instance, const Roster &roster) {
    check_roster(instance, roster);
    if (!roster.complete()) throw IncompleteRosterError("preference cost needs a complete roster");
    int total = 0;
    for (NurseId i = 0; i < roster.size(); ++i) total += instance.cost(i, roster[i]);
    return total;
}

}  // namespace nrp
