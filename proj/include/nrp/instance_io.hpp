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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nrp/model.hpp"

namespace nrp {

/// Instance text parse failure; line() is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &message);
    int line() const { return line_; }

  private:
    int line_;
};

/// Parses the line-oriented `NRP 1` instance format:
///
///   NRP 1
///   n <nurses>
///   m <patterns>
///   g <grade bands>
///   PATTERNS
///   <id> <14 chars of 0/1, days Mon..Sun then nights Mon..Sun>     (m lines, ids 0..m-1)
///   DEMAND
///   <R_k1> ... <R_kg>                                              (14 lines, k = 1..14)
///   NURSES
///   <id> <grade> <count> <pattern>:<cost> ...                      (n lines, ids 0..n-1)
///   OPTIMAL <cost>                                                 (optional)
///
/// Blank lines and lines starting with '#' are ignored.
Instance parse_instance(std::string_view text);

/// Canonical text form; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance &instance);

Instance load_instance(const std::filesystem::path &path);
void save_instance(const std::filesystem::path &path, const Instance &instance);

struct GeneratorParams {
    int nurses = 6;
    int patterns = 16;
    int grades = 3;
    int min_feasible = 4;
    int max_feasible = 8;
    double tightness = 0.8;  // demand = floor(tightness * cover of a hidden reference roster)
    double night_fraction = 0.3;  // share of night-only patterns and of night nurses
    int min_days = 3;
    int max_days = 5;
    int min_nights = 2;
    int max_nights = 4;
    double cost_skew = 2.5;  // cost = floor(101 u^skew), larger skews toward 0
    std::uint64_t seed = 1;
};

void validate(const GeneratorParams &params);

/// Random instance with day-only and night-only patterns. Always feasible because
/// demand never exceeds the cover of the hidden reference roster.
Instance generate_instance(const GeneratorParams &params);

}  // namespace nrp
