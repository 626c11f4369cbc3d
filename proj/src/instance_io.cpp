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

#include "nrp/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "nrp/random.hpp"

namespace nrp {

ParseError::ParseError(int line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Line {
    int number = 0;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            if (i > start) line.tokens.push_back(raw.substr(start, i - start));
        }
        if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

class Reader {
  public:
    explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

    bool done() const { return next_ == lines_.size(); }

    const Line &take(const char *expected) {
        if (done()) throw ParseError(last_line(), std::string("unexpected end of file, expected ") + expected);
        return lines_[next_++];
    }

    const Line *peek() const { return done() ? nullptr : &lines_[next_]; }

    int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  private:
    std::vector<Line> lines_;
    std::size_t next_ = 0;
};

int parse_int(std::string_view token, int line, const char *field) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("invalid integer for ") + field + ": '" + std::string(token) + "'");
    }
    return value;
}

void expect_tokens(const Line &line, std::size_t count, const char *what) {
    if (line.tokens.size() != count) {
        throw ParseError(line.number, std::string(what) + " expects " + std::to_string(count) + " fields, got " +
                                          std::to_string(line.tokens.size()));
    }
}

void expect_keyword(const Line &line, std::string_view keyword) {
    if (line.tokens.front() != keyword) {
        throw ParseError(line.number, "expected '" + std::string(keyword) + "', got '" +
                                          std::string(line.tokens.front()) + "'");
    }
}

int parse_count(Reader &reader, std::string_view keyword) {
    const Line &line = reader.take(std::string(keyword).c_str());
    expect_keyword(line, keyword);
    expect_tokens(line, 2, std::string(keyword).c_str());
    const int value = parse_int(line.tokens[1], line.number, std::string(keyword).c_str());
    if (value < 1) throw ParseError(line.number, std::string(keyword) + " must be at least 1");
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    Reader reader(tokenize(text));

    const Line &header = reader.take("header 'NRP 1'");
    if (header.tokens.size() != 2 || header.tokens[0] != "NRP" || header.tokens[1] != "1") {
        throw ParseError(header.number, "expected header 'NRP 1'");
    }
    const int n = parse_count(reader, "n");
    const int m = parse_count(reader, "m");
    const int g = parse_count(reader, "g");

    expect_keyword(reader.take("PATTERNS"), "PATTERNS");
    std::vector<ShiftPattern> patterns;
    patterns.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Line &line = reader.take("pattern line");
        expect_tokens(line, 2, "pattern line");
        const int id = parse_int(line.tokens[0], line.number, "pattern id");
        if (id != j) throw ParseError(line.number, "expected pattern id " + std::to_string(j));
        ShiftPattern pattern{id, {}};
        try {
            pattern.mask = ShiftPattern::mask_from_string(std::string(line.tokens[1]));
        } catch (const std::invalid_argument &e) {
            throw ParseError(line.number, e.what());
        }
        patterns.push_back(pattern);
    }

    expect_keyword(reader.take("DEMAND"), "DEMAND");
    Demand demand(g);
    for (int k = 0; k < kPeriods; ++k) {
        const Line &line = reader.take("demand line");
        expect_tokens(line, static_cast<std::size_t>(g), "demand line");
        for (int s = 1; s <= g; ++s) {
            const int value = parse_int(line.tokens[static_cast<std::size_t>(s - 1)], line.number, "demand");
            if (value < 0) throw ParseError(line.number, "demand must be nonnegative");
            demand.set(k, s, value);
        }
    }

    expect_keyword(reader.take("NURSES"), "NURSES");
    std::vector<Nurse> nurses;
    nurses.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Line &line = reader.take("nurse line");
        if (line.tokens.size() < 3) throw ParseError(line.number, "nurse line needs id, grade and count");
        Nurse nurse;
        nurse.id = parse_int(line.tokens[0], line.number, "nurse id");
        if (nurse.id != i) throw ParseError(line.number, "expected nurse id " + std::to_string(i));
        nurse.grade = parse_int(line.tokens[1], line.number, "grade");
        if (nurse.grade < 1 || nurse.grade > g) {
            throw ParseError(line.number, "grade " + std::to_string(nurse.grade) + " outside [1, " +
                                              std::to_string(g) + "]");
        }
        const int count = parse_int(line.tokens[2], line.number, "feasible set size");
        if (count < 1) throw ParseError(line.number, "feasible set must be nonempty");
        if (line.tokens.size() != static_cast<std::size_t>(count) + 3) {
            throw ParseError(line.number, "expected " + std::to_string(count) + " pattern:cost entries");
        }
        std::set<int> seen;
        for (int e = 0; e < count; ++e) {
            const std::string_view entry = line.tokens[static_cast<std::size_t>(e + 3)];
            const auto colon = entry.find(':');
            if (colon == std::string_view::npos) {
                throw ParseError(line.number, "expected <pattern>:<cost>, got '" + std::string(entry) + "'");
            }
            PatternOption option;
            option.pattern = parse_int(entry.substr(0, colon), line.number, "pattern id");
            option.cost = parse_int(entry.substr(colon + 1), line.number, "cost");
            if (option.pattern < 0 || option.pattern >= m) {
                throw ParseError(line.number, "reference to unknown pattern " + std::to_string(option.pattern));
            }
            if (option.cost < 0 || option.cost > 100) {
                throw ParseError(line.number, "cost " + std::to_string(option.cost) + " outside [0, 100]");
            }
            if (!seen.insert(option.pattern).second) {
                throw ParseError(line.number, "pattern " + std::to_string(option.pattern) + " listed twice");
            }
            nurse.options.push_back(option);
        }
        nurses.push_back(std::move(nurse));
    }

    std::optional<int> optimal;
    if (const Line *line = reader.peek(); line != nullptr && line->tokens.front() == "OPTIMAL") {
        reader.take("OPTIMAL");
        expect_tokens(*line, 2, "OPTIMAL");
        optimal = parse_int(line->tokens[1], line->number, "optimal cost");
        if (*optimal < 0) throw ParseError(line->number, "optimal cost must be nonnegative");
    }
    if (const Line *line = reader.peek(); line != nullptr) {
        throw ParseError(line->number, "unexpected trailing content '" + std::string(line->tokens.front()) + "'");
    }

    try {
        return Instance(g, std::move(patterns), std::move(nurses), std::move(demand), optimal);
    } catch (const ModelError &e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_instance(const Instance &instance) {
    std::ostringstream out;
    out << "NRP 1\n";
    out << "n " << instance.nurse_count() << '\n';
    out << "m " << instance.pattern_count() << '\n';
    out << "g " << instance.grade_count() << '\n';
    out << "PATTERNS\n";
    for (const ShiftPattern &pattern : instance.patterns()) out << pattern.id << ' ' << pattern.mask_string() << '\n';
    out << "DEMAND\n";
    for (int k = 0; k < kPeriods; ++k) {
        for (int s = 1; s <= instance.grade_count(); ++s) {
            out << (s > 1 ? " " : "") << instance.demand().at(k, s);
        }
        out << '\n';
    }
    out << "NURSES\n";
    for (const Nurse &nurse : instance.nurses()) {
        out << nurse.id << ' ' << nurse.grade << ' ' << nurse.options.size();
        for (const PatternOption &option : nurse.options) out << ' ' << option.pattern << ':' << option.cost;
        out << '\n';
    }
    if (instance.known_optimal()) out << "OPTIMAL " << *instance.known_optimal() << '\n';
    return out.str();
}

Instance load_instance(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

void save_instance(const std::filesystem::path &path, const Instance &instance) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_instance(instance);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void validate(const GeneratorParams &params) {
    if (params.nurses < 1 || params.patterns < 1 || params.grades < 1) {
        throw ModelError("generator counts n, m, g must be at least 1");
    }
    if (params.min_feasible < 1 || params.max_feasible < params.min_feasible) {
        throw ModelError("feasible set size range must satisfy 1 <= min <= max");
    }
    if (!(params.tightness > 0.0 && params.tightness <= 1.0)) throw ModelError("tightness must be in (0, 1]");
    if (params.night_fraction < 0.0 || params.night_fraction > 1.0) {
        throw ModelError("night fraction must be in [0, 1]");
    }
    if (params.min_days < 1 || params.max_days > 7 || params.min_days > params.max_days ||
        params.min_nights < 1 || params.max_nights > 7 || params.min_nights > params.max_nights) {
        throw ModelError("worked-period ranges must lie within 1..7");
    }
    if (!(params.cost_skew > 0.0)) throw ModelError("cost skew must be positive");
}

namespace {

int uniform_between(Rng &rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_index(rng, static_cast<std::size_t>(hi - lo + 1)));
}

// Partial Fisher-Yates: the first `count` entries of a shuffled copy.
template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t count, Rng &rng) {
    count = std::min(count, pool.size());
    for (std::size_t i = 0; i < count; ++i) {
        std::swap(pool[i], pool[i + uniform_index(rng, pool.size() - i)]);
    }
    pool.resize(count);
    return pool;
}

std::array<bool, kPeriods> random_block(Rng &rng, bool night, int worked) {
    std::array<bool, kPeriods> mask{};
    const int offset = night ? 7 : 0;
    for (int d : sample(std::vector<int>{0, 1, 2, 3, 4, 5, 6}, static_cast<std::size_t>(worked), rng)) {
        mask[static_cast<std::size_t>(offset + d)] = true;
    }
    return mask;
}

}  // namespace

Instance generate_instance(const GeneratorParams &params) {
    validate(params);
    Rng rng(params.seed);

    int night_patterns = static_cast<int>(std::lround(params.patterns * params.night_fraction));
    if (params.patterns >= 2 && params.night_fraction > 0.0 && params.night_fraction < 1.0) {
        night_patterns = std::clamp(night_patterns, 1, params.patterns - 1);
    }

    std::vector<ShiftPattern> patterns;
    std::vector<int> day_pool;
    std::vector<int> night_pool;
    std::set<std::array<bool, kPeriods>> used;
    for (int j = 0; j < params.patterns; ++j) {
        const bool night = j >= params.patterns - night_patterns;
        std::array<bool, kPeriods> mask{};
        for (int attempt = 0; attempt < 50; ++attempt) {
            mask = night ? random_block(rng, true, uniform_between(rng, params.min_nights, params.max_nights))
                         : random_block(rng, false, uniform_between(rng, params.min_days, params.max_days));
            if (used.insert(mask).second) break;
        }
        patterns.push_back(ShiftPattern{j, mask});
        (night ? night_pool : day_pool).push_back(j);
    }

    std::vector<Nurse> nurses;
    for (int i = 0; i < params.nurses; ++i) {
        Nurse nurse;
        nurse.id = i;
        nurse.grade = uniform_between(rng, 1, params.grades);
        const bool night = uniform01(rng) < params.night_fraction;
        const std::vector<int> &pool = (night && !night_pool.empty()) || day_pool.empty() ? night_pool : day_pool;
        const int size = uniform_between(rng, params.min_feasible, params.max_feasible);
        std::vector<int> chosen = sample(pool, static_cast<std::size_t>(size), rng);
        std::sort(chosen.begin(), chosen.end());
        for (int j : chosen) {
            const double u = uniform01(rng);
            const int cost = std::clamp(static_cast<int>(101.0 * std::pow(u, params.cost_skew)), 0, 100);
            nurse.options.push_back(PatternOption{j, cost});
        }
        // Feasible sets are listed most-preferred first, as in a ward's own pattern list.
        std::stable_sort(nurse.options.begin(), nurse.options.end(),
                         [](const PatternOption &a, const PatternOption &b) { return a.cost < b.cost; });
        nurses.push_back(std::move(nurse));
    }

    // Demand is a fraction of what a hidden random roster covers, so that roster stays feasible.
    Demand unconstrained(params.grades);
    const Instance draft(params.grades, patterns, nurses, unconstrained);
    Roster reference(params.nurses);
    for (const Nurse &nurse : nurses) {
        reference.assign(nurse.id, nurse.options[uniform_index(rng, nurse.options.size())].pattern);
    }
    const CoverageState cover = compute_coverage(draft, reference);
    Demand demand(params.grades);
    for (int k = 0; k < kPeriods; ++k) {
        for (int s = 1; s <= params.grades; ++s) {
            demand.set(k, s, static_cast<int>(std::floor(params.tightness * cover.covered(k, s))));
        }
    }
    return Instance(params.grades, std::move(patterns), std::move(nurses), std::move(demand));
}

}  // namespace nrp
