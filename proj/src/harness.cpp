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

#include "nrp/harness.hpp"

#include <omp.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <sstream>

#include "nrp/random.hpp"

namespace nrp {

namespace {

struct PresetEntry {
    Preset preset;
    std::string_view name;
};

constexpr std::array<PresetEntry, 7> kPresets{{
    {Preset::kFull, "FULL"},
    {Preset::kElim1Fixed05PlusElim2, "ELIM1_FIXED05_PLUS_ELIM2"},
    {Preset::kElim1Only, "ELIM1_ONLY"},
    {Preset::kElim2Only, "ELIM2_ONLY"},
    {Preset::kCoverRuleOnly, "COVER_RULE_ONLY"},
    {Preset::kCombinedRuleOnly, "COMBINED_RULE_ONLY"},
    {Preset::kConHeu, "CON_HEU"},
}};

std::string format_real(double value) {
    std::array<char, 64> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return ec == std::errc() ? std::string(buffer.data(), ptr) : std::string("nan");
}

double average(std::span<const double> values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace

std::string_view preset_name(Preset preset) {
    for (const auto &entry : kPresets) {
        if (entry.preset == preset) return entry.name;
    }
    return "UNKNOWN";
}

std::optional<Preset> parse_preset(std::string_view name) {
    for (const auto &entry : kPresets) {
        if (entry.name == name) return entry.preset;
    }
    return std::nullopt;
}

const std::vector<Preset> &all_presets() {
    static const std::vector<Preset> presets = [] {
        std::vector<Preset> out;
        for (const auto &entry : kPresets) out.push_back(entry.preset);
        return out;
    }();
    return presets;
}

SolverConfig apply_preset(Preset preset, SolverConfig base) {
    switch (preset) {
        case Preset::kFull:
        case Preset::kConHeu:
            break;
        case Preset::kElim1Fixed05PlusElim2:
            base.elim.mode = ThresholdMode::kFixed;
            base.elim.fixed_threshold = 0.5;
            break;
        case Preset::kElim1Only:
            base.elim.enable_elim2 = false;
            break;
        case Preset::kElim2Only:
            base.elim.enable_elim1 = false;
            break;
        case Preset::kCoverRuleOnly:
            base.recon = ReconstructionConfig{1.0, 0.0, 0.0};
            break;
        case Preset::kCombinedRuleOnly:
            base.recon = ReconstructionConfig{0.0, 1.0, 0.0};
            break;
    }
    return base;
}

RunResult execute(const Instance &instance, const RunSpec &spec) {
    const SolverConfig config = apply_preset(spec.preset, spec.config);
    return spec.preset == Preset::kConHeu ? run_con_heu(instance, config) : run(instance, config);
}

std::vector<RunResult> run_serial(std::span<const Instance> instances, std::span<const RunSpec> specs) {
    std::vector<RunResult> results;
    results.reserve(specs.size());
    for (const RunSpec &spec : specs) results.push_back(execute(instances[spec.instance], spec));
    return results;
}

std::vector<RunResult> run_parallel(std::span<const Instance> instances, std::span<const RunSpec> specs,
                                    int threads) {
    std::vector<RunResult> results(specs.size());
    std::vector<std::exception_ptr> errors(specs.size());
    const auto count = static_cast<std::int64_t>(specs.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : 1)
    for (std::int64_t r = 0; r < count; ++r) {
        const auto index = static_cast<std::size_t>(r);
        try {
            results[index] = execute(instances[specs[index].instance], specs[index]);
        } catch (...) {
            errors[index] = std::current_exception();
        }
    }

    for (const auto &error : errors) {
        if (error) std::rethrow_exception(error);
    }
    return results;
}

int thread_cap_from_env() {
    if (const char *value = std::getenv("NRP_THREADS")) {
        int threads = 0;
        const std::string_view text(value);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), threads);
        if (ec == std::errc() && ptr == text.data() + text.size() && threads > 0) return threads;
    }
    return omp_get_max_threads();
}

double censored_cost(const RunResult &result) {
    return result.best_feasible ? static_cast<double>(result.best_preference_cost) : kCensoredCost;
}

BatchStats compute_batch_stats(std::string instance, std::span<const RunResult> runs,
                               std::optional<int> known_optimal) {
    BatchStats stats;
    stats.instance = std::move(instance);
    stats.runs = static_cast<int>(runs.size());
    stats.known_optimal = known_optimal;
    double sum = 0.0;
    for (const RunResult &run : runs) {
        sum += censored_cost(run);
        if (!run.best_feasible) {
            ++stats.inf_count;
            continue;
        }
        const int cost = run.best_preference_cost;
        if (!stats.best || cost < *stats.best) stats.best = cost;
        if (known_optimal) {
            if (cost <= *known_optimal) ++stats.optimal_count;
            if (cost <= *known_optimal + kAcceptableGap) ++stats.within3_count;
        }
    }
    stats.mean = runs.empty() ? 0.0 : sum / static_cast<double>(runs.size());
    return stats;
}

std::string format_mean(double value) {
    std::array<char, 64> buffer{};
    std::snprintf(buffer.data(), buffer.size(), "%.1f", value);
    return buffer.data();
}

std::string batch_csv(std::span<const BatchStats> stats) {
    std::ostringstream out;
    out << "instance,runs,best,mean_censored,inf,optimal_count,within3\n";
    std::vector<double> best;
    std::vector<double> mean;
    std::vector<double> inf;
    std::vector<double> optimal_counts;
    std::vector<double> within3;
    std::vector<double> optima;
    for (const BatchStats &row : stats) {
        out << row.instance << ',' << row.runs << ',' << (row.best ? std::to_string(*row.best) : "N/A") << ','
            << format_mean(row.mean) << ',' << row.inf_count << ',';
        if (row.known_optimal) {
            out << row.optimal_count << ',' << row.within3_count;
            optimal_counts.push_back(row.optimal_count);
            within3.push_back(row.within3_count);
            optima.push_back(*row.known_optimal);
        } else {
            out << ',';
        }
        out << '\n';
        best.push_back(row.best ? *row.best : kCensoredCost);
        mean.push_back(row.mean);
        inf.push_back(row.inf_count);
    }
    if (stats.empty()) return out.str();

    std::vector<double> runs;
    for (const BatchStats &row : stats) runs.push_back(row.runs);
    out << "Av.," << format_mean(average(runs)) << ',' << format_mean(average(best)) << ','
        << format_mean(average(mean)) << ',' << format_mean(average(inf)) << ',';
    if (!optimal_counts.empty()) out << format_mean(average(optimal_counts)) << ',' << format_mean(average(within3));
    else out << ',';
    out << '\n';

    // Relative deviation of the averages from the average optimum.
    const double optimum = average(optima);
    if (optima.size() == stats.size() && optimum > 0.0) {
        out << "%,," << format_mean(100.0 * (average(best) - optimum) / optimum) << ','
            << format_mean(100.0 * (average(mean) - optimum) / optimum) << ",,,\n";
    }
    return out.str();
}

std::string run_csv_header() {
    return "instance,preset,seed,max_iterations,rng,best_cost,feasible,preference_cost,iterations_executed,"
           "iteration_of_best\n";
}

std::string run_csv_row(std::string_view instance, Preset preset, const SolverConfig &config,
                        const RunResult &result) {
    std::ostringstream out;
    out << instance << ',' << preset_name(preset) << ',' << result.seed << ',' << config.max_iterations << ','
        << kRngName << ',' << format_real(result.best_cost) << ',' << (result.best_feasible ? 1 : 0) << ','
        << result.best_preference_cost << ',' << result.iterations_executed << ',' << result.iteration_of_best
        << '\n';
    return out.str();
}

std::vector<AblationColumn> ablation_columns(std::int64_t preset_budget, std::span<const std::int64_t> sweep) {
    std::vector<AblationColumn> columns;
    for (std::int64_t budget : sweep) {
        columns.push_back({"FULL@" + std::to_string(budget), Preset::kFull, budget});
    }
    for (Preset preset : all_presets()) {
        columns.push_back({std::string(preset_name(preset)), preset, preset_budget});
    }
    return columns;
}

std::string ablation_csv(std::span<const std::string> instances, std::span<const AblationColumn> columns,
                         const std::vector<std::vector<double>> &means) {
    std::ostringstream out;
    out << "instance";
    for (const AblationColumn &column : columns) out << ',' << column.label;
    out << '\n';
    std::vector<std::vector<double>> by_column(columns.size());
    for (std::size_t row = 0; row < instances.size(); ++row) {
        out << instances[row];
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << ',' << format_mean(means[row][c]);
            by_column[c].push_back(means[row][c]);
        }
        out << '\n';
    }
    out << "Av.";
    for (const auto &column : by_column) out << ',' << format_mean(average(column));
    out << '\n';
    return out.str();
}

}  // namespace nrp
