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

#include <cmath>

#include "doctest.h"
#include "nrp/eliminate.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace nrp;
using namespace nrp::testing;

namespace {

std::vector<ComponentFitness> with_f(std::vector<double> values) {
    std::vector<ComponentFitness> out;
    for (double f : values) out.push_back({f, f, f});
    return out;
}

Roster full_roster(int n) { return Roster(std::vector<PatternId>(static_cast<std::size_t>(n), 0)); }

}  // namespace

TEST_CASE("elimination_one: perfect fitness always survives a random threshold") {
    Rng rng(1);
    const auto fitness = with_f({1.0, 1.0, 1.0});
    for (int call = 0; call < 1000; ++call) {
        CHECK(elimination_one(full_roster(3), fitness, EliminationConfig{}, rng).complete());
    }
}

TEST_CASE("elimination_one: fixed threshold is inclusive") {
    EliminationConfig config;
    config.mode = ThresholdMode::kFixed;
    config.fixed_threshold = 0.5;
    Rng rng(1);
    const Rng before = rng;
    const Roster out = elimination_one(full_roster(3), with_f({0.3, 0.5, 0.9}), config, rng);
    CHECK_FALSE(out.assigned(0));
    CHECK_FALSE(out.assigned(1));
    CHECK(out.assigned(2));
    CHECK((rng == before));
}

TEST_CASE("elimination_one: one draw per call in random mode, none when disabled") {
    Rng rng(9);
    Rng expected = rng;
    elimination_one(full_roster(5), with_f({0.1, 0.2, 0.3, 0.4, 0.5}), EliminationConfig{}, rng);
    expected.discard(1);
    CHECK((rng == expected));

    EliminationConfig off;
    off.enable_elim1 = false;
    const Roster out = elimination_one(full_roster(5), with_f({0, 0, 0, 0, 0}), off, rng);
    CHECK(out.complete());
    CHECK((rng == expected));
}

TEST_CASE("elimination_one: release frequency follows 1 - f") {
    const std::vector<double> f{0.0, 0.1, 0.25, 0.5, 0.75, 0.9};
    const auto fitness = with_f(f);
    std::vector<int> released(f.size(), 0);
    Rng rng(2024);
    constexpr int kCalls = 10000;
    for (int call = 0; call < kCalls; ++call) {
        const Roster out = elimination_one(full_roster(static_cast<int>(f.size())), fitness, EliminationConfig{}, rng);
        for (NurseId i = 0; i < out.size(); ++i) released[static_cast<std::size_t>(i)] += out.assigned(i) ? 0 : 1;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(std::abs(released[i] / double(kCalls) - (1.0 - f[i])) <= 0.02);
    }
}

TEST_CASE("elimination_one: threshold splits nurses exactly") {
    Rng rng(77);
    for (int call = 0; call < 500; ++call) {
        std::vector<double> values;
        for (int i = 0; i < 8; ++i) values.push_back(uniform01(rng));
        Rng peek = rng;
        const double threshold = uniform01(peek);
        const Roster out = elimination_one(full_roster(8), with_f(values), EliminationConfig{}, rng);
        CHECK((rng == peek));
        for (NurseId i = 0; i < 8; ++i) CHECK(out.assigned(i) == (values[static_cast<std::size_t>(i)] > threshold));
    }
}

TEST_CASE("elimination_one: length mismatch is an error") {
    Rng rng(1);
    CHECK_THROWS_AS(elimination_one(full_roster(3), with_f({0.5}), EliminationConfig{}, rng), InvalidRosterError);
}

TEST_CASE("elimination_two: boundary rates") {
    Rng rng(4);
    EliminationConfig config;
    config.r_m = 0.0;
    CHECK(elimination_two(full_roster(10), config, rng) == full_roster(10));
    config.r_m = 1.0;
    CHECK(elimination_two(full_roster(10), config, rng).assigned_count() == 0);
}

TEST_CASE("elimination_two: mean release count at r_m = 0.05") {
    Rng rng(55);
    constexpr int kCalls = 10000;
    long total = 0;
    for (int call = 0; call < kCalls; ++call) {
        total += 20 - elimination_two(full_roster(20), EliminationConfig{}, rng).assigned_count();
    }
    CHECK(std::abs(total / double(kCalls) - 1.0) <= 0.1);
}

TEST_CASE("elimination_two: one draw per assigned nurse only") {
    Rng rng(6);
    Roster partial = full_roster(10);
    partial.release(2);
    partial.release(7);
    Rng expected = rng;
    elimination_two(partial, EliminationConfig{}, rng);
    expected.discard(8);
    CHECK((rng == expected));
}

TEST_CASE("eliminations only release, and are deterministic") {
    Rng gen(12);
    for (int trial = 0; trial < 300; ++trial) {
        const Instance instance = random_tiny_instance(gen, {6, 8, 3, 4, 2});
        const Roster roster = random_complete_roster(instance, gen);
        std::vector<double> values;
        for (int i = 0; i < 6; ++i) values.push_back(uniform01(gen));
        EliminationConfig config;
        config.r_m = uniform01(gen) * 0.3;

        Rng a(static_cast<std::uint64_t>(trial));
        Rng b(static_cast<std::uint64_t>(trial));
        const Roster one_a = elimination_one(roster, with_f(values), config, a);
        const Roster two_a = elimination_two(one_a, config, a);
        const Roster two_b = elimination_two(elimination_one(roster, with_f(values), config, b), config, b);
        CHECK(two_a == two_b);
        CHECK((a == b));
        for (NurseId i = 0; i < 6; ++i) {
            if (one_a.assigned(i)) CHECK(one_a[i] == roster[i]);
            if (two_a.assigned(i)) CHECK(two_a[i] == one_a[i]);
        }
    }
}

TEST_CASE("both eliminations disabled is the identity") {
    EliminationConfig off;
    off.enable_elim1 = false;
    off.enable_elim2 = false;
    Rng rng(3);
    const Rng before = rng;
    const Roster roster = full_roster(4);
    CHECK(elimination_two(elimination_one(roster, with_f({0, 0, 0, 0}), off, rng), off, rng) == roster);
    CHECK((rng == before));
}

TEST_CASE("EliminationConfig validation") {
    EliminationConfig config;
    CHECK_NOTHROW(validate(config));
    config.r_m = 1.5;
    CHECK_THROWS_AS(validate(config), ModelError);
    config = EliminationConfig{};
    config.fixed_threshold = -0.1;
    CHECK_THROWS_AS(validate(config), ModelError);
}
