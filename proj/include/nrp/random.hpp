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

#include <cstddef>
#include <cstdint>
#include <random>

namespace nrp {

/// The single generator behind every stochastic step of a run.
using Rng = std::mt19937_64;

inline constexpr const char *kRngName = "mt19937_64";

/// Uniform double in [0, 1) from the top 53 bits of one draw. Unlike
/// std::uniform_real_distribution this is identical on every standard library.
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform index in [0, n) from one draw.
inline std::size_t uniform_index(Rng &rng, std::size_t n) {
    const auto index = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
    return index < n ? index : n - 1;
}

}  // namespace nrp
