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

// Command-line front end: solve, batch, ablate, exact, gen.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nrp/harness.hpp"
#include "nrp/instance_io.hpp"
#include "nrp/oracle.hpp"
#include "nrp/solver.hpp"

namespace fs = std::filesystem;

namespace {

struct SolverFlags {
    std::int64_t max_iterations = 50000;
    std::uint64_t seed = 0;
    double r_m = 0.05;
    double p1 = 0.80;
    double p2 = 0.18;
    double p3 = 0.02;
    double w1 = 0.5;
    double w2 = 0.5;
    double w_demand = 200.0;
    std::string e_mode = "indicator";
    double fixed_rs = -1.0;
    std::string preset = "FULL";
    bool no_early_stop = false;

    void attach(CLI::App &cmd, const std::string &seed_help) {
        cmd.add_option("--max-iters", max_iterations, "Iteration budget per run")->check(CLI::PositiveNumber);
        cmd.add_option("--seed", seed, seed_help);
        cmd.add_option("--rm", r_m, "Elimination-II release rate")->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--p1", p1, "Cover rule probability")->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--p2", p2, "Combined rule probability")->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--p3", p3, "Random rule probability")->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--w1", w1, "Fitness weight of the preference part")->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--w2", w2, "Fitness weight of the coverage part")->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--wdemand", w_demand, "Penalty per uncovered shift")->check(CLI::PositiveNumber);
        cmd.add_option("--e-mode", e_mode, "Combined rule coverage term")
            ->check(CLI::IsMember({"indicator", "shortfall"}));
        cmd.add_option("--fixed-rs", fixed_rs, "Use a fixed Elimination-I threshold instead of a random one")
            ->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--preset", preset, "Ablation preset")->check([](const std::string &name) {
            return nrp::parse_preset(name) ? std::string() : "unknown preset '" + name + "'";
        });
        cmd.add_flag("--no-early-stop", no_early_stop, "Ignore the instance's known optimum as a stopping rule");
    }

    nrp::SolverConfig config() const {
        nrp::SolverConfig config;
        config.max_iterations = max_iterations;
        config.seed = seed;
        config.elim.r_m = r_m;
        if (fixed_rs >= 0.0) {
            config.elim.mode = nrp::ThresholdMode::kFixed;
            config.elim.fixed_threshold = fixed_rs;
        }
        config.recon = {p1, p2, p3};
        config.eval.w1 = w1;
        config.eval.w2 = w2;
        config.eval.w_demand = w_demand;
        config.eval.e_mode = e_mode == "shortfall" ? nrp::CoverageTerm::kShortfall : nrp::CoverageTerm::kIndicator;
        config.stop_at_known_optimal = !no_early_stop;
        return config;
    }

    nrp::Preset preset_value() const { return *nrp::parse_preset(preset); }
};

void print_warnings(const fs::path &path, const nrp::Instance &instance) {
    for (const std::string &warning : instance.warnings()) {
        std::cerr << path.string() << ": warning: " << warning << '\n';
    }
}

struct LoadedSuite {
    std::vector<std::string> names;
    std::vector<nrp::Instance> instances;
    bool had_errors = false;
};

LoadedSuite load_suite(const std::vector<std::string> &paths) {
    LoadedSuite suite;
    for (const std::string &path : paths) {
        try {
            nrp::Instance instance = nrp::load_instance(path);
            print_warnings(path, instance);
            suite.names.push_back(fs::path(path).stem().string());
            suite.instances.push_back(std::move(instance));
        } catch (const std::exception &e) {
            std::cerr << path << ": error: " << e.what() << '\n';
            suite.had_errors = true;
        }
    }
    return suite;
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_solve(const std::string &path, const SolverFlags &flags, bool print_roster) {
    const nrp::Instance instance = nrp::load_instance(path);
    print_warnings(path, instance);
    nrp::RunSpec spec{0, flags.preset_value(), flags.config()};
    const nrp::RunResult result = nrp::execute(instance, spec);

    std::cout << "instance: " << path << '\n';
    std::cout << "preset: " << nrp::preset_name(spec.preset) << '\n';
    std::cout << "seed: " << result.seed << '\n';
    std::cout << "best cost: " << result.best_cost << '\n';
    std::cout << "preference cost: " << result.best_preference_cost << '\n';
    std::cout << "feasible: " << (result.best_feasible ? "yes" : "no") << '\n';
    std::cout << "iterations: " << result.iterations_executed << '\n';
    std::cout << "iteration of best: " << result.iteration_of_best << '\n';
    if (instance.known_optimal()) std::cout << "known optimum: " << *instance.known_optimal() << '\n';
    std::cout << "wall time (s): " << result.wall_seconds << '\n';
    if (print_roster) {
        for (nrp::NurseId i = 0; i < result.best_roster.size(); ++i) {
            const nrp::PatternId j = result.best_roster[i];
            std::cout << "nurse " << i << " -> pattern " << j << ' ' << instance.pattern(j).mask_string()
                      << " cost " << instance.cost(i, j) << '\n';
        }
    }
    return result.best_feasible ? 0 : 2;
}

int cmd_batch(const std::vector<std::string> &paths, int runs, const SolverFlags &flags, const std::string &out,
              const std::string &runs_csv) {
    const LoadedSuite suite = load_suite(paths);
    const nrp::Preset preset = flags.preset_value();
    std::vector<nrp::RunSpec> specs;
    for (std::size_t i = 0; i < suite.instances.size(); ++i) {
        for (int r = 0; r < runs; ++r) {
            nrp::SolverConfig config = flags.config();
            config.seed = flags.seed + static_cast<std::uint64_t>(r);
            specs.push_back({i, preset, config});
        }
    }
    const auto results = nrp::run_parallel(suite.instances, specs, nrp::thread_cap_from_env());

    std::vector<nrp::BatchStats> stats;
    std::string rows = nrp::run_csv_header();
    for (std::size_t i = 0; i < suite.instances.size(); ++i) {
        const auto first = results.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(runs));
        stats.push_back(nrp::compute_batch_stats(suite.names[i], {first, first + runs},
                                                 suite.instances[i].known_optimal()));
        for (int r = 0; r < runs; ++r) {
            const std::size_t k = i * static_cast<std::size_t>(runs) + static_cast<std::size_t>(r);
            rows += nrp::run_csv_row(suite.names[i], preset, specs[k].config, results[k]);
        }
    }
    write_output(out, nrp::batch_csv(stats));
    if (!runs_csv.empty()) write_output(runs_csv, rows);
    return suite.had_errors ? 1 : 0;
}

int cmd_ablate(const std::vector<std::string> &paths, int runs, const SolverFlags &flags,
               const std::vector<std::int64_t> &sweep, const std::string &out) {
    const LoadedSuite suite = load_suite(paths);
    const auto columns = nrp::ablation_columns(flags.max_iterations, sweep);
    std::vector<nrp::RunSpec> specs;
    for (std::size_t i = 0; i < suite.instances.size(); ++i) {
        for (const nrp::AblationColumn &column : columns) {
            for (int r = 0; r < runs; ++r) {
                nrp::SolverConfig config = flags.config();
                config.max_iterations = column.max_iterations;
                config.seed = flags.seed + static_cast<std::uint64_t>(r);
                config.trajectory = nrp::TrajectoryMode::kNone;
                specs.push_back({i, column.preset, config});
            }
        }
    }
    const auto results = nrp::run_parallel(suite.instances, specs, nrp::thread_cap_from_env());

    std::vector<std::vector<double>> means(suite.instances.size(), std::vector<double>(columns.size()));
    std::size_t k = 0;
    for (std::size_t i = 0; i < suite.instances.size(); ++i) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            double sum = 0.0;
            for (int r = 0; r < runs; ++r) sum += nrp::censored_cost(results[k++]);
            means[i][c] = runs > 0 ? sum / runs : 0.0;
        }
    }
    write_output(out, nrp::ablation_csv(suite.names, columns, means));
    return suite.had_errors ? 1 : 0;
}

int cmd_exact(const std::string &path, std::int64_t node_budget, const std::string &write_optimal) {
    const nrp::Instance instance = nrp::load_instance(path);
    print_warnings(path, instance);
    const nrp::ExactResult result = nrp::exact_solve(instance, node_budget);
    std::cout << "status: " << nrp::to_string(result.status) << '\n';
    if (result.cost) {
        std::cout << (result.status == nrp::ExactStatus::kOptimal ? "cost: " : "incumbent cost: ") << *result.cost
                  << '\n';
    }
    std::cout << "nodes: " << result.nodes_explored << '\n';
    if (!write_optimal.empty()) {
        if (result.status != nrp::ExactStatus::kOptimal) {
            std::cerr << "not writing " << write_optimal << ": no proven optimum\n";
            return 2;
        }
        nrp::save_instance(write_optimal, instance.with_known_optimal(result.cost));
    }
    switch (result.status) {
        case nrp::ExactStatus::kOptimal:
            return 0;
        case nrp::ExactStatus::kInfeasible:
            return 2;
        case nrp::ExactStatus::kTimeout:
            break;
    }
    return 3;
}

int cmd_gen(nrp::GeneratorParams params, int count, const std::string &out_dir, bool with_optimal,
            std::int64_t node_budget) {
    if (count == 0) return 0;
    fs::create_directories(out_dir);
    const std::uint64_t base_seed = params.seed;
    for (int c = 0; c < count; ++c) {
        params.seed = base_seed + static_cast<std::uint64_t>(c);
        nrp::Instance instance = nrp::generate_instance(params);
        std::ostringstream name;
        name << "gen_" << std::setw(4) << std::setfill('0') << c << ".nrp";
        const fs::path path = fs::path(out_dir) / name.str();
        if (with_optimal) {
            const nrp::ExactResult exact = nrp::exact_solve(instance, node_budget);
            if (exact.status == nrp::ExactStatus::kOptimal) {
                instance = instance.with_known_optimal(exact.cost);
            } else {
                std::cerr << path.string() << ": warning: exact solve ended " << nrp::to_string(exact.status)
                          << ", written without OPTIMAL\n";
            }
        }
        nrp::save_instance(path, instance);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Nurse rostering by iterated component elimination and greedy reconstruction"};
    app.require_subcommand(1);

    std::string instance_path;
    std::vector<std::string> instance_paths;
    std::string out = "-";
    std::string runs_csv;
    int runs = 20;
    bool print_roster = false;

    auto *solve = app.add_subcommand("solve", "Solve one instance and report the best roster");
    SolverFlags solve_flags;
    solve->add_option("instance", instance_path, "Instance file")->required();
    solve_flags.attach(*solve, "Random seed");
    solve->add_flag("--roster", print_roster, "Print the best roster");

    auto *batch = app.add_subcommand("batch", "Multi-seed runs with summary statistics as CSV");
    SolverFlags batch_flags;
    batch->add_option("instances", instance_paths, "Instance files")->required();
    batch->add_option("--runs", runs, "Runs per instance; run r uses seed base+r")->check(CLI::NonNegativeNumber);
    batch_flags.attach(*batch, "Base seed");
    batch->add_option("--out", out, "Statistics CSV path ('-' for stdout)");
    batch->add_option("--runs-csv", runs_csv, "Also write one CSV row per run");

    auto *ablate = app.add_subcommand("ablate", "Censored means for every preset and an iteration sweep");
    SolverFlags ablate_flags;
    std::vector<std::int64_t> sweep{10000, 20000, 30000, 50000, 100000};
    ablate->add_option("instances", instance_paths, "Instance files")->required();
    ablate->add_option("--runs", runs, "Runs per cell")->check(CLI::NonNegativeNumber);
    ablate_flags.attach(*ablate, "Base seed");
    ablate->add_option("--sweep", sweep, "Iteration budgets for the FULL sweep columns")->delimiter(',');
    ablate->add_option("--out", out, "Matrix CSV path ('-' for stdout)");

    auto *exact = app.add_subcommand("exact", "Exact branch and bound for small instances");
    std::int64_t node_budget = 50'000'000;
    std::string write_optimal;
    exact->add_option("instance", instance_path, "Instance file")->required();
    exact->add_option("--node-budget", node_budget, "Give up after this many search nodes");
    exact->add_option("--write-optimal", write_optimal, "Write a copy of the instance with its OPTIMAL line");

    auto *gen = app.add_subcommand("gen", "Write seeded random instances");
    nrp::GeneratorParams params;
    int count = 1;
    std::string out_dir = ".";
    bool with_optimal = false;
    gen->add_option("--n", params.nurses, "Nurses");
    gen->add_option("--m", params.patterns, "Shift patterns");
    gen->add_option("--g", params.grades, "Grade bands");
    gen->add_option("--min-feasible", params.min_feasible, "Smallest feasible set");
    gen->add_option("--max-feasible", params.max_feasible, "Largest feasible set");
    gen->add_option("--tightness", params.tightness, "Demand as a fraction of a reference roster's cover");
    gen->add_option("--night-fraction", params.night_fraction, "Share of night patterns and night nurses");
    gen->add_option("--cost-skew", params.cost_skew, "Exponent biasing preference costs toward 0");
    gen->add_option("--seed", params.seed, "Seed of the first instance; instance c uses seed+c");
    gen->add_option("--count", count, "Number of instances")->check(CLI::NonNegativeNumber);
    gen->add_option("--out-dir", out_dir, "Output directory");
    gen->add_flag("--with-optimal", with_optimal, "Embed the exact optimum in each file");
    gen->add_option("--node-budget", node_budget, "Search node budget for --with-optimal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*solve) return cmd_solve(instance_path, solve_flags, print_roster);
        if (*batch) return cmd_batch(instance_paths, runs, batch_flags, out, runs_csv);
        if (*ablate) return cmd_ablate(instance_paths, runs, ablate_flags, sweep, out);
        if (*exact) return cmd_exact(instance_path, node_budget, write_optimal);
        if (*gen) return cmd_gen(params, count, out_dir, with_optimal, node_budget);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
