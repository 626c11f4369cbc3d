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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nrp {

/// Periods in the weekly horizon: indices 0..6 are days Mon..Sun, 7..13 nights Mon..Sun.
inline constexpr int kPeriods = 14;

using NurseId = int;
using PatternId = int;

inline constexpr PatternId kUnassigned = -1;

class ModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidRosterError : public ModelError {
  public:
    using ModelError::ModelError;
};

class IncompleteRosterError : public ModelError {
  public:
    using ModelError::ModelError;
};

struct ShiftPattern {
    PatternId id = 0;
    std::array<bool, kPeriods> mask{};

    bool covers(int period) const { return mask[static_cast<std::size_t>(period)]; }
    int worked_periods() const;

    /// Parses a 14-character 0/1 string; throws std::invalid_argument otherwise.
    static std::array<bool, kPeriods> mask_from_string(const std::string &bits);
    std::string mask_string() const;

    bool operator==(const ShiftPattern &) const = default;
};

/// One entry of a nurse's feasible set A(i), carrying its preference cost.
struct PatternOption {
    PatternId pattern = 0;
    int cost = 0;

    bool operator==(const PatternOption &) const = default;
};

struct Nurse {
    NurseId id = 0;
    int grade = 1;  // 1 is the highest grade
    std::vector<PatternOption> options;  // feasible set, in data-set order

    bool operator==(const Nurse &) const = default;
};

/// Whether `nurse` counts toward grade band `band` (grade `band` or higher).
inline bool serves_band(const Nurse &nurse, int band) { return nurse.grade <= band; }

/// Demand R[k][s]: nurses of grade s or higher required in period k.
class Demand {
  public:
    Demand() = default;
    explicit Demand(int grades);

    int grades() const { return grades_; }
    int at(int period, int band) const { return values_[index(period, band)]; }
    void set(int period, int band, int value) { values_[index(period, band)] = value; }

    bool operator==(const Demand &) const = default;

  private:
    std::size_t index(int period, int band) const {
        return static_cast<std::size_t>(period * grades_ + (band - 1));
    }

    int grades_ = 0;
    std::vector<int> values_;
};

/// The rostering problem. Validated on construction and immutable afterwards.
class Instance {
  public:
    Instance(int grades, std::vector<ShiftPattern> patterns, std::vector<Nurse> nurses, Demand demand,
             std::optional<int> known_optimal = std::nullopt);

    int nurse_count() const { return static_cast<int>(nurses_.size()); }
    int pattern_count() const { return static_cast<int>(patterns_.size()); }
    int grade_count() const { return grades_; }

    const std::vector<ShiftPattern> &patterns() const { return patterns_; }
    const ShiftPattern &pattern(PatternId j) const { return patterns_[static_cast<std::size_t>(j)]; }
    const std::vector<Nurse> &nurses() const { return nurses_; }
    const Nurse &nurse(NurseId i) const { return nurses_[static_cast<std::size_t>(i)]; }
    const Demand &demand() const { return demand_; }
    std::optional<int> known_optimal() const { return known_optimal_; }

    /// Preference cost p_ij, or -1 when j is not in A(i).
    int cost(NurseId i, PatternId j) const { return cost_table_[lookup(i, j)]; }
    bool allows(NurseId i, PatternId j) const {
        return j >= 0 && j < pattern_count() && cost_table_[lookup(i, j)] >= 0;
    }

    Instance with_known_optimal(std::optional<int> value) const;

    /// Soft-check messages (non-cumulative demand, empty patterns).
    const std::vector<std::string> &warnings() const { return warnings_; }

    bool operator==(const Instance &other) const;

  private:
    std::size_t lookup(NurseId i, PatternId j) const {
        return static_cast<std::size_t>(i) * patterns_.size() + static_cast<std::size_t>(j);
    }

    int grades_;
    std::vector<ShiftPattern> patterns_;
    std::vector<Nurse> nurses_;
    Demand demand_;
    std::optional<int> known_optimal_;
    std::vector<int> cost_table_;
    std::vector<std::string> warnings_;
};

/// One pattern per nurse, or kUnassigned for nurses released by an elimination step.
class Roster {
  public:
    Roster() = default;
    explicit Roster(int nurses) : assignment_(static_cast<std::size_t>(nurses), kUnassigned) {}
    explicit Roster(std::vector<PatternId> assignment) : assignment_(std::move(assignment)) {}
    Roster(std::initializer_list<PatternId> assignment) : assignment_(assignment) {}

    int size() const { return static_cast<int>(assignment_.size()); }
    PatternId operator[](NurseId i) const { return assignment_[static_cast<std::size_t>(i)]; }
    bool assigned(NurseId i) const { return (*this)[i] != kUnassigned; }
    void assign(NurseId i, PatternId j) { assignment_[static_cast<std::size_t>(i)] = j; }
    void release(NurseId i) { assignment_[static_cast<std::size_t>(i)] = kUnassigned; }

    bool complete() const;
    int assigned_count() const;
    const std::vector<PatternId> &assignment() const { return assignment_; }

    bool operator==(const Roster &) const = default;

  private:
    std::vector<PatternId> assignment_;
};

/// Per-(period, band) cover counts and the remaining shortfall against demand.
class CoverageState {
  public:
    CoverageState() = default;
    explicit CoverageState(const Instance &instance);

    int grades() const { return grades_; }
    int covered(int period, int band) const { return covered_[index(period, band)]; }
    int shortfall(int period, int band) const { return shortfall_[index(period, band)]; }
    int total_shortfall() const;

    void add(const Instance &instance, NurseId i, PatternId j);
    void remove(const Instance &instance, NurseId i, PatternId j);

    bool operator==(const CoverageState &) const = default;

  private:
    std::size_t index(int period, int band) const {
        return static_cast<std::size_t>(period * grades_ + (band - 1));
    }
    void apply(const Instance &instance, NurseId i, PatternId j, int delta);

    int grades_ = 0;
    std::vector<int> covered_;
    std::vector<int> shortfall_;
    std::vector<int> demand_;
};

/// Throws InvalidRosterError if the roster has the wrong size or uses a pattern outside A(i).
void check_roster(const Instance &instance, const Roster &roster);

CoverageState compute_coverage(const Instance &instance, const Roster &roster);

bool is_feasible(const Instance &instance, const Roster &roster);

/// Sum of p_ij over the assignments. Throws IncompleteRosterError on a partial roster.
int preference_cost(const Instance &instance, const Roster &roster);

}  // namespace nrp
