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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nrp/model.hpp"
#include "nrp/solver.hpp"

namespace nrp {

/// Cost charged to a run whose best roster is infeasible when averaging.
inline constexpr double kCensoredCost = 255.0;
/// Tolerance, in cost units, for a run to count as acceptable.
inline constexpr int kAcceptableGap = 3;

enum class Preset {
    kFull,
    kElim1Fixed05PlusElim2,
    kElim1Only,
    kElim2Only,
    kCoverRuleOnly,
    kCombinedRuleOnly,
    kConHeu,
};

std::string_view preset_name(Preset preset);
std::optional<Preset> parse_preset(std::string_view name);
const std::vector<Preset> &all_presets();

/// `base` with the preset's ablation applied. kConHeu leaves the config as is;
/// what differs is the entry point (see execute()).
SolverConfig apply_preset(Preset preset, SolverConfig base);

/// One solver invocation of a batch.
struct RunSpec {
    std::size_t instance = 0;  // index into the batch's instance list
    Preset preset = Preset::kFull;
    SolverConfig config;
};

RunResult execute(const Instance &instance, const RunSpec &spec);

/// Reference implementation: one run after another.
std::vector<RunResult> run_serial(std::span<const Instance> instances, std::span<const RunSpec> specs);

/// Same results as run_serial, with runs spread over up to `threads` OpenMP threads.
std::vector<RunResult> run_parallel(std::span<const Instance> instances, std::span<const RunSpec> specs,
                                    int threads);

/// NRP_THREADS if set to a positive integer, else the OpenMP default.
int thread_cap_from_env();

/// Preference cost for a feasible best roster, kCensoredCost otherwise.
double censored_cost(const RunResult &result);

struct BatchStats {
    std::string instance;
    int runs = 0;
    std::optional<int> best;  // best feasible preference cost, empty if no run was feasible
    double mean = 0.0;  // censored
    int inf_count = 0;
    std::optional<int> known_optimal;
    int optimal_count = 0;  // meaningful only with a known optimum
    int within3_count = 0;
};

BatchStats compute_batch_stats(std::string instance, std::span<const RunResult> runs,
                               std::optional<int> known_optimal);

/// Per-instance rows plus the "Av." row and, when every optimum is known, the "%" row.
std::string batch_csv(std::span<const BatchStats> stats);

std::string run_csv_header();
std::string run_csv_row(std::string_view instance, Preset preset, const SolverConfig &config,
                        const RunResult &result);

struct AblationColumn {
    std::string label;
    Preset preset = Preset::kFull;
    std::int64_t max_iterations = 0;
};

/// FULL at each sweep budget, then every preset at `preset_budget`.
std::vector<AblationColumn> ablation_columns(std::int64_t preset_budget, std::span<const std::int64_t> sweep);

/// `means[row][column]` are censored means; adds a final "Av." row.
std::string ablation_csv(std::span<const std::string> instances, std::span<const AblationColumn> columns,
                         const std::vector<std::vector<double>> &means);

/// Fixed one-decimal rendering used for every mean in the CSV outputs.
std::string format_mean(double value);

}  // namespace nrp
