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

// Acceptance gate. Prints one PASS, FAIL or WAIVED line per criterion and exits
// nonzero if any criterion fails. Every threshold is a named constant below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nrp/eliminate.hpp"
#include "nrp/harness.hpp"
#include "nrp/instance_io.hpp"
#include "nrp/oracle.hpp"
#include "nrp/reconstruct.hpp"
#include "support/oracles.hpp"

using namespace nrp;
using namespace nrp::testing;

namespace {

// Criterion 1
constexpr int kOracleInstances = 200;
constexpr double kOracleSeconds = 60.0;
constexpr std::int64_t kOracleNodeBudget = 100'000'000;

// Criteria 2, 3, 4 and 7 share one suite.
constexpr int kSuiteSize = 50;
constexpr std::uint64_t kSuiteSeed = 1000;
constexpr std::int64_t kSuiteNodeBudget = 50'000'000;
constexpr int kSeeds = 20;
constexpr std::int64_t kBudget = 5000;
constexpr double kMinOptimalShare = 0.90;
constexpr double kMinWithin3Share = 0.99;
constexpr double kSuiteSeconds = 300.0;
constexpr double kSignTestAlpha = 0.05;
constexpr std::int64_t kSweep[] = {1000, 5000, 10000, 50000};

// Criterion 5
constexpr int kSurvivalCalls = 10000;
constexpr double kSurvivalTolerance = 0.02;

// Criterion 6
constexpr int kArithmeticStates = 1000;

// Criterion 8
constexpr int kDatasetInstances = 52;
constexpr int kDatasetMinOptimal = 40;
constexpr int kDatasetMinWithin3 = 48;
constexpr double kDatasetRunSeconds = 60.0;
constexpr std::int64_t kDatasetIterations = 50000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int criterion, const char *verdict, const std::string &detail) {
    std::printf("criterion %d: %s  %s\n", criterion, verdict, detail.c_str());
    std::fflush(stdout);
    if (std::string(verdict) == "FAIL") ++failures;
}

void verdict(int criterion, bool pass, const std::string &detail) { report(criterion, pass ? "PASS" : "FAIL", detail); }

std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, format, a, b, c, d);
    return buffer;
}

// ---------------------------------------------------------------------------

void criterion_oracle() {
    const auto start = Clock::now();
    Rng rng(20260101);
    int agree = 0;
    int feasible = 0;
    int checked = 0;
    double largest = 0.0;
    while (checked < kOracleInstances) {
        // Alternate unstructured instances (often infeasible) with generator instances (always feasible).
        std::optional<Instance> drawn;
        if (checked % 2 == 0) {
            TinyShape shape;
            shape.nurses = 1 + static_cast<int>(uniform_index(rng, 6));
            shape.patterns = 8 + static_cast<int>(uniform_index(rng, 9));
            shape.grades = 1 + static_cast<int>(uniform_index(rng, 3));
            shape.max_options = 8;
            shape.max_demand = 1 + static_cast<int>(uniform_index(rng, 2));
            drawn = random_tiny_instance(rng, shape);
        } else {
            GeneratorParams params;
            params.nurses = 1 + static_cast<int>(uniform_index(rng, 6));
            params.grades = 1 + static_cast<int>(uniform_index(rng, 3));
            params.seed = rng();
            drawn = generate_instance(params);
        }
        const Instance &instance = *drawn;
        double product = 1.0;
        for (const Nurse &nurse : instance.nurses()) product *= static_cast<double>(nurse.options.size());
        if (product > 1e6) continue;
        largest = std::max(largest, product);
        ++checked;
        const Enumeration truth = enumerate_all(instance);
        const ExactResult result = exact_solve(instance, kOracleNodeBudget);
        const bool status_ok = result.status == (truth.best_cost ? ExactStatus::kOptimal : ExactStatus::kInfeasible);
        if (status_ok && result.cost == truth.best_cost) ++agree;
        if (truth.best_cost) ++feasible;
    }
    const double elapsed = seconds_since(start);
    verdict(1, agree == kOracleInstances && elapsed < kOracleSeconds,
            fmt("%.0f/%.0f instances agree (%.0f feasible, largest search space %.0f)", agree, kOracleInstances,
                feasible, largest) +
                fmt(", %.1f s", elapsed));
}

// ---------------------------------------------------------------------------

struct Suite {
    std::vector<Instance> instances;
    std::vector<std::string> names;
    bool ok = true;
    std::string problem;
};

Suite build_suite() {
    Suite suite;
    for (int c = 0; c < kSuiteSize; ++c) {
        GeneratorParams params;
        params.seed = kSuiteSeed + static_cast<std::uint64_t>(c);
        const Instance instance = generate_instance(params);
        const ExactResult exact = exact_solve(instance, kSuiteNodeBudget);
        if (exact.status != ExactStatus::kOptimal) {
            suite.ok = false;
            suite.problem = "instance seed " + std::to_string(params.seed) + " ended " + std::string(to_string(exact.status));
            continue;
        }
        // Re-verify the embedded optimum with a fresh solve and the roster it returned.
        const Instance tagged = instance.with_known_optimal(exact.cost);
        const ExactResult again = exact_solve(tagged, kSuiteNodeBudget);
        if (again.cost != exact.cost || !direct_feasible(tagged, exact.roster) ||
            preference_cost(tagged, exact.roster) != *exact.cost) {
            suite.ok = false;
            suite.problem = "optimum for seed " + std::to_string(params.seed) + " failed re-verification";
        }
        suite.instances.push_back(tagged);
        char name[32];
        std::snprintf(name, sizeof name, "gen_%04d", c);
        suite.names.emplace_back(name);
    }
    return suite;
}

std::vector<RunSpec> suite_specs(const Suite &suite, Preset preset, std::int64_t budget) {
    std::vector<RunSpec> specs;
    for (std::size_t i = 0; i < suite.instances.size(); ++i) {
        for (int s = 0; s < kSeeds; ++s) {
            SolverConfig config;
            config.max_iterations = budget;
            config.seed = static_cast<std::uint64_t>(s);
            config.trajectory = TrajectoryMode::kNone;
            specs.push_back({i, preset, config});
        }
    }
    return specs;
}

std::vector<double> censored(const std::vector<RunResult> &runs) {
    std::vector<double> out;
    for (const RunResult &r : runs) out.push_back(censored_cost(r));
    return out;
}

// Suite average of per-instance censored means; equal to the plain mean because every
// instance has the same number of runs.
double suite_average(const std::vector<double> &costs) {
    double sum = 0.0;
    for (double c : costs) sum += c;
    return costs.empty() ? 0.0 : sum / static_cast<double>(costs.size());
}

std::vector<RunResult> run_suite(const Suite &suite, Preset preset, std::int64_t budget) {
    const auto specs = suite_specs(suite, preset, budget);
    return run_parallel(suite.instances, specs, thread_cap_from_env());
}

void criterion_optimality(const Suite &suite, const std::vector<RunResult> &full, double elapsed) {
    int optimal = 0;
    int within3 = 0;
    for (std::size_t r = 0; r < full.size(); ++r) {
        const int opt = *suite.instances[r / kSeeds].known_optimal();
        if (!full[r].best_feasible) continue;
        optimal += full[r].best_preference_cost <= opt ? 1 : 0;
        within3 += full[r].best_preference_cost <= opt + kAcceptableGap ? 1 : 0;
    }
    const double runs = static_cast<double>(full.size());
    const double optimal_share = optimal / runs;
    const double within3_share = within3 / runs;
    verdict(2,
            suite.ok && optimal_share >= kMinOptimalShare && within3_share >= kMinWithin3Share &&
                elapsed < kSuiteSeconds,
            fmt("optimal %.1f%%, within 3 %.1f%% over %.0f runs, %.1f s", 100 * optimal_share,
                100 * within3_share, runs, elapsed));
}

void criterion_ablation(const Suite &suite, const std::vector<RunResult> &full) {
    const std::vector<double> base = censored(full);
    const double full_average = suite_average(base);
    bool pass = suite.ok;
    std::string detail = fmt("FULL %.2f", full_average);
    for (Preset preset : {Preset::kElim1Only, Preset::kElim2Only, Preset::kCoverRuleOnly, Preset::kCombinedRuleOnly,
                          Preset::kConHeu}) {
        const std::vector<double> other = censored(run_suite(suite, preset, kBudget));
        int better = 0;
        int worse = 0;
        for (std::size_t r = 0; r < base.size(); ++r) {
            better += base[r] < other[r] ? 1 : 0;
            worse += base[r] > other[r] ? 1 : 0;
        }
        const double average = suite_average(other);
        const double p = sign_test_p(better, worse);
        pass = pass && full_average < average && p < kSignTestAlpha;
        detail += "; " + std::string(preset_name(preset)) + fmt(" %.2f (+%.0f/-%.0f, p=%.2g)", average, better, worse, p);
    }
    verdict(3, pass, detail);
}

void criterion_sweep(const Suite &suite) {
    bool pass = suite.ok;
    double previous = INFINITY;
    std::string detail;
    for (std::int64_t budget : kSweep) {
        const double average = suite_average(censored(run_suite(suite, Preset::kFull, budget)));
        pass = pass && average <= previous;
        previous = average;
        detail += (detail.empty() ? "" : ", ") + fmt("%.0f: %.2f", static_cast<double>(budget), average);
    }
    verdict(4, pass, detail);
}

// ---------------------------------------------------------------------------

void criterion_survival() {
    const std::vector<double> f{0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
    std::vector<ComponentFitness> fitness;
    for (double v : f) fitness.push_back({v, v, v});
    const Roster full(std::vector<PatternId>(f.size(), 0));
    std::vector<int> released(f.size(), 0);
    Rng rng(5150);
    for (int call = 0; call < kSurvivalCalls; ++call) {
        const Roster out = elimination_one(full, fitness, EliminationConfig{}, rng);
        for (NurseId i = 0; i < out.size(); ++i) released[static_cast<std::size_t>(i)] += out.assigned(i) ? 0 : 1;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        worst = std::max(worst, std::abs(released[i] / double(kSurvivalCalls) - (1.0 - f[i])));
    }
    verdict(5, worst <= kSurvivalTolerance,
            fmt("max |freq - (1 - f)| = %.4f over %.0f calls", worst, kSurvivalCalls));
}

// ---------------------------------------------------------------------------

ShiftPattern make_pattern(PatternId id, const char *bits) { return {id, ShiftPattern::mask_from_string(bits)}; }

bool arithmetic_fixtures() {
    bool ok = true;
    {
        // Night requirement (-4, 0, +1, -3, -1, -2, 0); Mon-Fri nights covers three short nights.
        Demand demand(1);
        const int nights[7] = {4, 1, 0, 3, 1, 2, 0};
        for (int d = 0; d < 7; ++d) demand.set(7 + d, 1, nights[d]);
        const Instance instance(1, {make_pattern(0, "00000000110000"), make_pattern(1, "00000001111100")},
                                {{0, 1, {{0, 0}}}, {1, 1, {{1, 0}}}}, demand);
        const Roster partial({0, kUnassigned});
        const CoverageState coverage = compute_coverage(instance, partial);
        ok = ok && cover_value(instance, coverage, 1, 1) == 3;
        ok = ok && recount_cover_value(instance, partial, 1, 1) == 3;
    }
    {
        const Instance relaxed(3, {make_pattern(0, "11111000000000"), make_pattern(1, "00000001111100")},
                               {{0, 1, {{0, 0}, {1, 100}}}}, Demand(3));
        const CoverageState none(relaxed);
        ok = ok && combined_score(relaxed, none, EvalWeights{}, 0, 0) == 100.0;
        ok = ok && combined_score(relaxed, none, EvalWeights{}, 0, 1) == 0.0;
        Demand one_short(3);
        for (int s = 1; s <= 3; ++s) one_short.set(0, s, 1);
        const Instance tight(3, {make_pattern(0, "10000000000000")}, {{0, 1, {{0, 0}}}}, one_short);
        ok = ok && combined_score(tight, CoverageState(tight), EvalWeights{}, 0, 0) == 111.0;
    }
    return ok;
}

void criterion_arithmetic() {
    const bool fixtures = arithmetic_fixtures();
    Rng rng(6006);
    int states = 0;
    int mismatches = 0;
    while (states < kArithmeticStates) {
        const Instance instance = random_tiny_instance(rng, {1 + states % 6, 10, 1 + states % 3, 6, 3});
        const Roster partial = random_partial_roster(instance, rng, 0.5);
        const CoverageState coverage = compute_coverage(instance, partial);
        EvalWeights weights;
        weights.w_p = 0.5 + uniform01(rng);
        weights.w_grade.assign(static_cast<std::size_t>(instance.grade_count()), 0.0);
        for (double &w : weights.w_grade) w = std::floor(uniform01(rng) * 10.0);
        const bool literal = states % 2 == 1;
        weights.e_mode = literal ? CoverageTerm::kShortfall : CoverageTerm::kIndicator;
        for (NurseId i = 0; i < instance.nurse_count(); ++i) {
            for (const PatternOption &option : instance.nurse(i).options) {
                if (cover_value(instance, coverage, i, option.pattern) !=
                    recount_cover_value(instance, partial, i, option.pattern)) {
                    ++mismatches;
                }
                const double lib = combined_score(instance, coverage, weights, i, option.pattern);
                const double ref = rescore_combined(instance, partial, i, option.pattern, weights.w_p,
                                                    weights.w_grade, literal);
                if (std::abs(lib - ref) > 1e-9 * std::max(1.0, std::abs(ref))) ++mismatches;
            }
        }
        ++states;
    }
    verdict(6, fixtures && mismatches == 0,
            std::string(fixtures ? "fixtures agree" : "fixture mismatch") +
                fmt(", %.0f mismatches over %.0f random states", mismatches, kArithmeticStates));
}

// ---------------------------------------------------------------------------

void criterion_determinism(const Suite &suite) {
    std::string first;
    std::string second;
    int rows = 0;
    for (std::string *out : {&first, &second}) {
        rows = 0;
        for (std::size_t i = 0; i < suite.instances.size(); i += 5) {
            for (Preset preset : all_presets()) {
                SolverConfig config;
                config.max_iterations = 2000;
                config.seed = 42 + i;
                const RunResult result = execute(suite.instances[i], {i, preset, config});
                *out += run_csv_row(suite.names[i], preset, config, result);
                ++rows;
            }
        }
    }
    verdict(7, !first.empty() && first == second, fmt("%.0f rows replayed byte-identical", rows));
}

// ---------------------------------------------------------------------------

void criterion_dataset() {
    const char *dir = std::getenv("NRP_DATASET_DIR");
    if (dir == nullptr || *dir == '\0') {
        report(8, "WAIVED", "published instance set not available (set NRP_DATASET_DIR to a converted copy)");
        return;
    }
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".nrp") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<Instance> instances;
    for (const auto &path : files) instances.push_back(load_instance(path));
    const bool all_tagged = std::all_of(instances.begin(), instances.end(),
                                        [](const Instance &x) { return x.known_optimal().has_value(); });
    if (static_cast<int>(instances.size()) != kDatasetInstances || !all_tagged) {
        verdict(8, false, fmt("expected %.0f instances with OPTIMAL lines, found %.0f", kDatasetInstances,
                              static_cast<double>(instances.size())));
        return;
    }
    std::vector<RunSpec> specs;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (int s = 0; s < kSeeds; ++s) {
            SolverConfig config;
            config.max_iterations = kDatasetIterations;
            config.seed = static_cast<std::uint64_t>(s);
            config.trajectory = TrajectoryMode::kNone;
            specs.push_back({i, Preset::kFull, config});
        }
    }
    const auto results = run_parallel(instances, specs, thread_cap_from_env());
    int optimal = 0;
    int within3 = 0;
    double slowest = 0.0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const std::span<const RunResult> runs(results.data() + i * kSeeds, kSeeds);
        const BatchStats stats = compute_batch_stats("", runs, instances[i].known_optimal());
        optimal += stats.best && *stats.best <= *stats.known_optimal ? 1 : 0;
        within3 += stats.best && *stats.best <= *stats.known_optimal + kAcceptableGap ? 1 : 0;
        for (const RunResult &r : runs) slowest = std::max(slowest, r.wall_seconds);
    }
    verdict(8, optimal >= kDatasetMinOptimal && within3 >= kDatasetMinWithin3 && slowest <= kDatasetRunSeconds,
            fmt("best = optimal on %.0f, within 3 on %.0f of %.0f; slowest run %.1f s", optimal, within3,
                kDatasetInstances, slowest));
}

}  // namespace

int main() {
    try {
        criterion_oracle();

        const auto start = Clock::now();
        const Suite suite = build_suite();
        const std::vector<RunResult> full = run_suite(suite, Preset::kFull, kBudget);
        const double elapsed = seconds_since(start);
        if (!suite.ok) std::printf("suite problem: %s\n", suite.problem.c_str());

        criterion_optimality(suite, full, elapsed);
        criterion_ablation(suite, full);
        criterion_sweep(suite);
        criterion_survival();
        criterion_arithmetic();
        criterion_determinism(suite);
        criterion_dataset();
    } catch (const std::exception &e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
